#include "hooksum/hook_sums.hpp"

#include <string>
#include <utility>
#include <vector>

#include "hooksum/error.hpp"
#include "hooksum/motzkin.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum {

namespace {

BigNatural ul(std::uint64_t v) { return BigNatural(static_cast<unsigned long>(v)); }

} // namespace

BigNatural hook_sum_direct(HookBound h, std::uint64_t n) {
    const auto shapes = enumerate_hook(h, n);
    std::vector<BigNatural> terms(shapes.size());
    const auto count = static_cast<std::int64_t>(shapes.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        terms[static_cast<std::size_t>(i)] = syt_count(shapes[static_cast<std::size_t>(i)]);
    }
    BigNatural total = 0;
    for (const auto& t : terms) total += t;
    return total;
}

BigNatural strip_sum_closed(std::uint32_t k, std::uint64_t n) {
    switch (k) {
    case 2:
        return binomial(n, n / 2);
    case 3: {
        BigNatural sum = 0;
        for (std::uint64_t j = 0; 2 * j <= n; ++j) sum += binomial(n, 2 * j) * catalan(j);
        return sum;
    }
    case 4:
        return catalan((n + 1) / 2) * catalan((n + 2) / 2);
    case 5: {
        BigNatural sum = 0;
        for (std::uint64_t j = 0; 2 * j <= n; ++j) {
            // 6 C_j (2j+2)! / ((j+2)! (j+3)!) is an integer for every j
            const BigNatural weight =
                exact_div(6 * catalan(j) * factorial(2 * j + 2), factorial(j + 2) * factorial(j + 3),
                          "S(5,0) weight at j=" + std::to_string(j));
            sum += binomial(n, 2 * j) * weight;
        }
        return sum;
    }
    default:
        raise(ErrorCode::UnsupportedStrip,
              "no closed form for S(" + std::to_string(k) + ",0;n); supported k are 2..5");
    }
}

BigNatural hook_sum_closed_11(std::uint64_t n) {
    if (n == 0) raise(ErrorCode::OutOfDomain, "S(1,1;n) = 2^(n-1) needs n >= 1");
    return power_of_two(n - 1);
}

BigNatural s21_r_sum(std::uint64_t n) {
    BigNatural sum = 0;
    for (std::uint64_t r = 0; r < n; ++r) sum += binomial(n - r, (n - r) / 2) * binomial(n, r);
    return sum;
}

BigNatural s21_k_sum(std::uint64_t n) {
    BigNatural sum = 0;
    if (n < 4) return sum;
    const auto f = factorial_table(n);
    for (std::uint64_t k = 1; k + 1 <= n / 2; ++k) {
        BigNatural den = f[k] * f[k + 1] * f[n - 2 * k - 2];
        den *= ul(n - k - 1);
        den *= ul(n - k);
        sum += exact_div(f[n], den, "S(2,1) k-sum term at k=" + std::to_string(k));
    }
    return sum;
}

BigNatural hook_sum_closed_21(std::uint64_t n, S21Variant variant) {
    if (n < 2) raise(ErrorCode::OutOfDomain, "closed S(2,1;n) needs n >= 2");
    BigNatural inner = s21_r_sum(n);
    if (variant == S21Variant::Original) {
        inner += s21_k_sum(n);
    } else {
        inner += motzkin_sum_a(n) - 1;
    }
    return exact_div(inner, 4, "S(2,1;" + std::to_string(n) + ") quarter") + 1;
}

BigNatural hook_sum_closed_31(std::uint64_t n) {
    const auto a = motzkin_sum_table(n);
    BigNatural inner = binomial(n, n / 2);
    for (std::uint64_t j = 0; j <= n; ++j) inner += a[j] * binomial(n, j);
    return exact_div(inner, 2, "S(3,1;" + std::to_string(n) + ") half");
}

BigNatural star_sum(std::uint64_t n, HookSumMethod method) {
    if (n < 4) raise(ErrorCode::OutOfDomain, "S*(2,2;n) needs n >= 4");
    if (method == HookSumMethod::Direct) {
        BigNatural sum = 0;
        for (const auto& p : enumerate_star(n)) sum += syt_count(p);
        return sum;
    }
    const std::uint64_t m = n / 2;
    if (n % 2 == 0) return catalan(m - 1) * catalan(m);
    const BigNatural cm = catalan(m);
    return exact_div(ul(2 * m + 1) * cm * cm, ul(m + 2), "S*(2,2;2m+1) closed form");
}

namespace {

// Orient the pair so that the closed-form table only lists one side.
HookBound oriented(HookBound h) {
    if (h.k < h.l) std::swap(h.k, h.l);
    return h;
}

} // namespace

bool has_closed_form(HookBound h) {
    const HookBound o = oriented(h);
    if (o.l == 0) return o.k >= 2 && o.k <= 5;
    return o.l == 1 && o.k >= 1 && o.k <= 3;
}

BigNatural hook_sum(HookBound h, std::uint64_t n, HookSumMethod method) {
    if (method == HookSumMethod::Direct) return hook_sum_direct(h, n);
    if (!has_closed_form(h)) {
        raise(ErrorCode::UnsupportedStrip, "no closed form for S(" + std::to_string(h.k) + "," +
                                               std::to_string(h.l) + ";n)");
    }
    const HookBound o = oriented(h);
    if (o.l == 0) return strip_sum_closed(o.k, n);
    switch (o.k) {
    case 1: return hook_sum_closed_11(n);
    case 2: return hook_sum_closed_21(n);
    default: return hook_sum_closed_31(n);
    }
}

} // namespace hooksum
