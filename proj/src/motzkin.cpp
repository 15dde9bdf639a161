#include "hooksum/motzkin.hpp"

#include <string>

#include "hooksum/error.hpp"

namespace hooksum {

namespace {

BigNatural explicit_a(std::uint64_t n) {
    if (n == 0) return 1;
    const auto f = factorial_table(n);
    BigNatural sum = 0;
    for (std::uint64_t k = 1; 2 * k <= n; ++k) {
        BigNatural den = f[k - 1] * f[k] * f[n - 2 * k];
        den *= BigNatural(static_cast<unsigned long>(n - k));
        den *= BigNatural(static_cast<unsigned long>(n - k + 1));
        sum += exact_div(f[n], den, "a(n) explicit term");
    }
    return sum;
}

} // namespace

std::vector<BigNatural> motzkin_sum_table(std::uint64_t hi, SequenceMethod method) {
    std::vector<BigNatural> table;
    table.reserve(hi + 1);
    if (method == SequenceMethod::Explicit) {
        for (std::uint64_t n = 0; n <= hi; ++n) table.push_back(explicit_a(n));
        return table;
    }
    for (std::uint64_t n = 0; n <= hi; ++n) {
        if (n == 0) {
            table.emplace_back(1);
        } else if (n == 1) {
            table.emplace_back(0);
        } else if (n == 2) {
            table.emplace_back(1);
        } else {
            BigNatural num = 2 * table[n - 1] + 3 * table[n - 2];
            num *= BigNatural(static_cast<unsigned long>(n - 1));
            table.push_back(exact_div(num, BigNatural(static_cast<unsigned long>(n + 1)),
                                      "a(n) recurrence at n=" + std::to_string(n)));
        }
    }
    return table;
}

BigNatural motzkin_sum_a(std::uint64_t n, SequenceMethod method) {
    if (method == SequenceMethod::Explicit) return explicit_a(n);
    return motzkin_sum_table(n, SequenceMethod::Recurrence).back();
}

BigNatural motzkin_number(std::uint64_t n) {
    const auto a = motzkin_sum_table(n + 1);
    return a[n] + a[n + 1];
}

std::vector<BigNatural> motzkin_number_table(std::uint64_t hi) {
    const auto a = motzkin_sum_table(hi + 1);
    std::vector<BigNatural> m;
    m.reserve(hi + 1);
    for (std::uint64_t n = 0; n <= hi; ++n) m.push_back(a[n] + a[n + 1]);
    return m;
}

BigNatural catalan(std::uint64_t n) {
    return exact_div(binomial(2 * n, n), BigNatural(static_cast<unsigned long>(n + 1)), "catalan");
}

double asymptotic_ratio(std::uint64_t n) {
    if (n == 0) raise(ErrorCode::OutOfDomain, "asymptotic ratio needs n >= 1");
    const auto a = motzkin_sum_table(n + 1);
    mpq_class ratio(4 * a[n], a[n] + a[n + 1]);
    ratio.canonicalize();
    return ratio.get_d();
}

MotzkinTable::MotzkinTable(std::uint64_t hi) : a_(motzkin_sum_table(hi + 1)) {}

} // namespace hooksum
