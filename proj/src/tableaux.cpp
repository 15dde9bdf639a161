#include "hooksum/tableaux.hpp"

#include <string>
#include <vector>

#include "hooksum/error.hpp"

namespace hooksum {

namespace {

// Smallest prime factor for every value up to n.
std::vector<std::uint32_t> smallest_factors(std::uint64_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

void add_factorization(std::vector<std::int64_t>& exps, const std::vector<std::uint32_t>& spf,
                       std::uint64_t value, std::int64_t sign) {
    while (value > 1) {
        const std::uint32_t p = spf[value];
        exps[p] += sign;
        value /= p;
    }
}

} // namespace

BigNatural syt_count(const Partition& p) {
    const std::uint64_t n = p.size();
    if (n <= 1) return 1;
    const auto spf = smallest_factors(n);
    std::vector<std::int64_t> exps(n + 1, 0);
    for (std::uint64_t v = 2; v <= n; ++v) add_factorization(exps, spf, v, +1);
    for (const auto& row : hook_lengths(p)) {
        for (std::uint32_t h : row) add_factorization(exps, spf, h, -1);
    }
    BigNatural result = 1;
    BigNatural term;
    for (std::uint64_t q = 2; q <= n; ++q) {
        if (exps[q] == 0) continue;
        if (exps[q] < 0) {
            raise(ErrorCode::NotDivisible,
                  "hook product does not divide n! for " + display_partition(p));
        }
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(exps[q]));
        result *= term;
    }
    return result;
}

BigNatural syt_count_double_hook(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || 2 * k > n) {
        raise(ErrorCode::OutOfDomain, "double hook needs 1 <= k and 2k <= n (k=" + std::to_string(k) +
                                          ", n=" + std::to_string(n) + ")");
    }
    BigNatural den = factorial(k - 1) * factorial(k) * factorial(n - 2 * k);
    den *= BigNatural(static_cast<unsigned long>(n - k));
    den *= BigNatural(static_cast<unsigned long>(n - k + 1));
    return exact_div(factorial(n), den, "double hook degree");
}

BigNatural syt_count_hook_shape(std::uint64_t n) {
    if (n == 0) raise(ErrorCode::OutOfDomain, "hook shape (n,1^n) needs n >= 1");
    return binomial(2 * n - 1, n);
}

namespace {

struct FillState {
    std::vector<Part> filled; // cells already filled in each row
    std::uint64_t placed = 0;
};

bool can_place(const Partition& shape, const std::vector<Part>& filled, std::size_t row) {
    return filled[row] < shape.part(row) && (row == 0 || filled[row - 1] > filled[row]);
}

std::uint64_t count_completions(const Partition& shape, std::vector<Part>& filled,
                                std::uint64_t remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t row = 0; row < shape.length(); ++row) {
        if (!can_place(shape, filled, row)) continue;
        ++filled[row];
        total += count_completions(shape, filled, remaining - 1);
        --filled[row];
    }
    return total;
}

} // namespace

BigNatural syt_enumerate_count(const Partition& p, std::uint64_t cap) {
    if (cap > kMaxTableauCap) {
        raise(ErrorCode::CapExceeded, "tableau cap " + std::to_string(cap) + " exceeds hard limit " +
                                          std::to_string(kMaxTableauCap));
    }
    if (p.size() > cap) {
        raise(ErrorCode::CapExceeded, "shape " + display_partition(p) + " has size " +
                                          std::to_string(p.size()) + " > cap " + std::to_string(cap));
    }
    const std::uint64_t n = p.size();

    // Breadth-first expansion of the first entries to get independent subtrees.
    constexpr std::size_t kTargetFrontier = 256;
    std::vector<FillState> frontier{FillState{std::vector<Part>(p.length(), 0), 0}};
    while (frontier.size() < kTargetFrontier && !frontier.empty() && frontier.front().placed < n) {
        std::vector<FillState> next;
        for (const auto& s : frontier) {
            for (std::size_t row = 0; row < p.length(); ++row) {
                if (!can_place(p, s.filled, row)) continue;
                FillState child = s;
                ++child.filled[row];
                ++child.placed;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    std::uint64_t total = 0;
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t i = 0; i < count; ++i) {
        std::vector<Part> filled = frontier[static_cast<std::size_t>(i)].filled;
        total += count_completions(p, filled, n - frontier[static_cast<std::size_t>(i)].placed);
    }
    return BigNatural(static_cast<unsigned long>(total));
}

} // namespace hooksum
