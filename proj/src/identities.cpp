#include "hooksum/identities.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <string>

#include "hooksum/characters.hpp"
#include "hooksum/error.hpp"
#include "hooksum/hook_sums.hpp"
#include "hooksum/motzkin.hpp"
#include "hooksum/tableaux.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hooksum {

std::string_view to_string(VerificationStatus s) noexcept {
    switch (s) {
    case VerificationStatus::Pass: return "pass";
    case VerificationStatus::Fail: return "fail";
    case VerificationStatus::Partial: return "partial";
    }
    return "fail";
}

namespace {

using Check = std::optional<FailureRecord>;

BigNatural ul(std::uint64_t v) { return BigNatural(static_cast<unsigned long>(v)); }

Check mismatch(std::uint64_t index, const BigNatural& lhs, const BigNatural& rhs, std::string note) {
    if (lhs == rhs) return std::nullopt;
    return FailureRecord{index, to_decimal(lhs), to_decimal(rhs), std::move(note)};
}

Check first_of(std::initializer_list<Check> checks) {
    for (const auto& c : checks) {
        if (c) return c;
    }
    return std::nullopt;
}

// C_{m-1} C_m = C(2m-2,m-1) C(2m,m) / (m(m+1))
//             = sum_{k=0}^{m-2} (2m)! / (k!(k+1)!(m-k-2)!(m-k-1)!(m-1) m^2 (m+1))
Check check_b3(std::uint64_t m, const IdentityContext&) {
    const BigNatural lhs = catalan(m - 1) * catalan(m);
    const BigNatural middle =
        exact_div(binomial(2 * m - 2, m - 1) * binomial(2 * m, m), ul(m) * ul(m + 1), "b3 middle form");
    const auto f = factorial_table(2 * m);
    const BigNatural tail = ul(m - 1) * ul(m) * ul(m) * ul(m + 1);
    BigNatural ksum = 0;
    for (std::uint64_t k = 0; k + 2 <= m; ++k) {
        ksum += exact_div(f[2 * m], f[k] * f[k + 1] * f[m - k - 2] * f[m - k - 1] * tail,
                          "b3 k-sum term k=" + std::to_string(k));
    }
    return first_of({mismatch(m, lhs, middle, "C_{m-1} C_m vs binomial form"),
                     mismatch(m, lhs, ksum, "C_{m-1} C_m vs k-sum")});
}

// (2m+1)/(m+2) C_m^2 = C(2m,m) C(2m+1,m) / ((m+1)(m+2))
//                    = sum_{k=0}^{m-2} 2 (2m+1)! / (k!(k+2)!(m-k-2)!(m-k-1)!(m-1) m (m+1)(m+2))
Check check_b4(std::uint64_t m, const IdentityContext&) {
    const BigNatural cm = catalan(m);
    const BigNatural lhs = exact_div(ul(2 * m + 1) * cm * cm, ul(m + 2), "b4 left side");
    const BigNatural middle = exact_div(binomial(2 * m, m) * binomial(2 * m + 1, m), ul(m + 1) * ul(m + 2),
                                        "b4 middle form");
    const auto f = factorial_table(2 * m + 1);
    const BigNatural num = 2 * f[2 * m + 1];
    const BigNatural tail = ul(m - 1) * ul(m) * ul(m + 1) * ul(m + 2);
    BigNatural ksum = 0;
    for (std::uint64_t k = 0; k + 2 <= m; ++k) {
        ksum += exact_div(num, f[k] * f[k + 2] * f[m - k - 2] * f[m - k - 1] * tail,
                          "b4 k-sum term k=" + std::to_string(k));
    }
    return first_of({mismatch(m, lhs, middle, "(2m+1)/(m+2) C_m^2 vs binomial form"),
                     mismatch(m, lhs, ksum, "(2m+1)/(m+2) C_m^2 vs k-sum")});
}

// 2 sum_j C(n,j) C(n-j,j) = r-sum + a(n) - 1 = r-sum + k-sum
Check check_lemma42(std::uint64_t n, const IdentityContext& ctx) {
    BigNatural lhs = 0;
    for (std::uint64_t j = 1; 2 * j <= n; ++j) lhs += binomial(n, j) * binomial(n - j, j);
    lhs *= 2;
    const BigNatural rsum = s21_r_sum(n);
    return first_of({mismatch(n, lhs, rsum + ctx.a[n] - 1, "2 sum C(n,j)C(n-j,j) vs r-sum + a(n) - 1"),
                     mismatch(n, lhs, rsum + s21_k_sum(n), "2 sum C(n,j)C(n-j,j) vs r-sum + k-sum")});
}

Check check_a3_equiv(std::uint64_t n, const IdentityContext& ctx) {
    return mismatch(n, s21_k_sum(n), ctx.a[n] - 1, "k-sum vs a(n) - 1");
}

Check check_rewrite8(std::uint64_t n, const IdentityContext&) {
    return mismatch(n, hook_sum_closed_31(n), hook_sum_direct({3, 1}, n), "half-sum formula vs direct S(3,1;n)");
}

Check check_a_recurrence(std::uint64_t n, const IdentityContext& ctx) {
    return mismatch(n, motzkin_sum_a(n, SequenceMethod::Explicit), ctx.a[n], "a(n) explicit vs recurrence");
}

// Explicit a(n) against the strip formula, and the hook-formula sum where it is cheap.
constexpr std::uint64_t kDirectStripLimit = 40;

Check check_a_motzkin(std::uint64_t n, const IdentityContext&) {
    const BigNatural lhs = motzkin_sum_a(n, SequenceMethod::Explicit) + motzkin_sum_a(n + 1, SequenceMethod::Explicit);
    if (auto c = mismatch(n, lhs, strip_sum_closed(3, n), "a(n) + a(n+1) vs closed S(3,0;n)")) return c;
    if (n <= kDirectStripLimit) return mismatch(n, lhs, hook_sum_direct({3, 0}, n), "a(n) + a(n+1) vs direct S(3,0;n)");
    return std::nullopt;
}

Check check_star_even(std::uint64_t m, const IdentityContext&) {
    const BigNatural direct = star_sum(2 * m, HookSumMethod::Direct);
    return first_of({mismatch(m, star_sum(2 * m, HookSumMethod::Closed), direct, "C_{m-1} C_m vs S*(2,2;2m)"),
                     mismatch(m, strip_sum_closed(4, 2 * m - 2), direct, "S(4,0;2m-2) vs S*(2,2;2m)")});
}

Check check_star_odd(std::uint64_t m, const IdentityContext&) {
    const BigNatural direct = star_sum(2 * m + 1, HookSumMethod::Direct);
    const BigNatural scaled =
        exact_div(ul(2 * m + 1) * strip_sum_closed(4, 2 * m - 1), ul(m + 2), "(2m+1)/(m+2) S(4,0;2m-1)");
    return first_of({mismatch(m, star_sum(2 * m + 1, HookSumMethod::Closed), direct,
                              "(2m+1)/(m+2) C_m^2 vs S*(2,2;2m+1)"),
                     mismatch(m, scaled, direct, "(2m+1)/(m+2) S(4,0;2m-1) vs S*(2,2;2m+1)")});
}

Check check_hump_theorem(std::uint64_t n, const IdentityContext&) {
    const BigNatural hm = total_humps(PathKind::Motzkin, n, HumpMethod::Closed);
    return first_of({mismatch(n, hm, hook_sum_closed_21(n, S21Variant::Rewritten) - 1,
                              "HM_n vs rewritten S(2,1;n) - 1"),
                     mismatch(n, hm, hook_sum_closed_21(n, S21Variant::Original) - 1,
                              "HM_n vs original S(2,1;n) - 1")});
}

Check from_report(const VerificationReport& r) {
    if (r.status == VerificationStatus::Fail) return r.first_failure;
    return std::nullopt;
}

Check check_p3(std::uint64_t n, const IdentityContext&) { return from_report(verify_p3(n)); }

Check check_correspondences(std::uint64_t n, const IdentityContext& ctx) {
    return from_report(verify_correspondences(n, ctx.caps));
}

constexpr std::array kRegistry{
    IdentityDefinition{"b3", "C_{m-1} C_m = C(2m-2,m-1) C(2m,m)/(m(m+1)) = k-sum",
                       "Catalan kernel vs central binomials vs factorial k-sum", 2, {2, 200}, {2, 1000},
                       check_b3},
    IdentityDefinition{"b4", "(2m+1)/(m+2) C_m^2 = C(2m,m) C(2m+1,m)/((m+1)(m+2)) = k-sum",
                       "Catalan kernel vs binomials vs factorial k-sum", 2, {2, 200}, {2, 1000}, check_b4},
    IdentityDefinition{"lemma42", "2 sum C(n,j) C(n-j,j) = r-sum + a(n) - 1 = r-sum + k-sum",
                       "binomial product sum vs recurrence a(n) vs factorial k-sum", 2, {2, 300}, {2, 1500},
                       check_lemma42},
    IdentityDefinition{"a3-equiv", "k-sum of the S(2,1) formula = a(n) - 1",
                       "factorial k-sum vs recurrence a(n)", 2, {2, 300}, {2, 2000}, check_a3_equiv},
    IdentityDefinition{"rewrite8", "S(3,1;n) = (C(n,floor(n/2)) + sum a(j) C(n,j))/2",
                       "half-sum over a(j) vs hook-formula sum over H(3,1;n)", 0, {0, 40}, {0, 80},
                       check_rewrite8},
    IdentityDefinition{"a-recurrence", "a(n) explicit sum = a(n) recurrence",
                       "factorial sum vs three-term recurrence", 3, {3, 500}, {3, 2000}, check_a_recurrence},
    IdentityDefinition{"a-motzkin", "a(n) + a(n+1) = M_n = S(3,0;n)",
                       "explicit a(n) vs Catalan-binomial strip formula vs hook-formula sum", 0, {0, 60},
                       {0, 600}, check_a_motzkin},
    IdentityDefinition{"prop31-star-even", "S*(2,2;2m) = C_{m-1} C_m = S(4,0;2m-2)",
                       "SYT counts over the star family vs Catalan products", 2, {2, 100}, {2, 1000},
                       check_star_even},
    IdentityDefinition{"prop31-star-odd", "S*(2,2;2m+1) = (2m+1)/(m+2) C_m^2 = (2m+1)/(m+2) S(4,0;2m-1)",
                       "SYT counts over the star family vs Catalan products", 2, {2, 100}, {2, 1000},
                       check_star_odd},
    IdentityDefinition{"hump-theorem", "HM_n = S(2,1;n) - 1",
                       "binomial hump formula vs both closed S(2,1;n) variants", 2, {2, 300}, {2, 1500},
                       check_hump_theorem},
    IdentityDefinition{"p3", "chi(2,0;n) + Omega(n) = 2 chi(3,1;n), Omega coefficients in {1,2}",
                       "Young's rule expansion vs hook enumeration, coefficient by coefficient", 0, {0, 12},
                       {0, 24}, check_p3},
    IdentityDefinition{"hump-correspondences", "HM_n = S(2,1;n)-1, HD_n = f^(n,1^n), #Dyck = f^(n,n), #Motzkin = S(3,0;n)",
                       "path enumeration vs hook formula and strip formula", 0, {1, 14}, {0, 14},
                       check_correspondences},
};

} // namespace

std::optional<FailureRecord> evaluate_identity(const IdentityDefinition& def, std::uint64_t index,
                                               const IdentityContext& ctx) {
    try {
        return def.check(index, ctx);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        return FailureRecord{index, "not divisible", "exact quotient", e.what()};
    }
}

std::span<const IdentityDefinition> identity_registry() { return kRegistry; }

const IdentityDefinition* find_identity(std::string_view name) {
    for (const auto& def : kRegistry) {
        if (def.name == name) return &def;
    }
    return nullptr;
}

IndexRange profile_range(const IdentityDefinition& def, Profile profile) {
    return profile == Profile::Quick ? def.quick : def.full;
}

IdentityContext make_identity_context(std::uint64_t hi, const VerifyOptions& options) {
    return IdentityContext{motzkin_sum_table(hi + 1, SequenceMethod::Recurrence), options.caps};
}

VerificationReport verify(std::string_view identity, std::uint64_t lo, std::uint64_t hi,
                          const VerifyOptions& options) {
    const IdentityDefinition* def = find_identity(identity);
    if (def == nullptr) raise(ErrorCode::UnknownIdentity, "'" + std::string(identity) + "'");
    if (lo > hi) {
        raise(ErrorCode::InvalidRange, "[" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
    }
    if (hi < def->domain_min) {
        raise(ErrorCode::InvalidRange, std::string(identity) + " is defined from index " +
                                           std::to_string(def->domain_min));
    }
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{std::string(identity), lo, hi, VerificationStatus::Pass, std::nullopt, {}};
    const std::uint64_t first = std::max(lo, def->domain_min);
    const IdentityContext ctx = make_identity_context(hi, options);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const std::uint64_t block = static_cast<std::uint64_t>(std::max(4 * threads, 1));
    std::vector<Check> results;
    std::vector<std::exception_ptr> errors;
    for (std::uint64_t base = first; base <= hi && !report.first_failure; base += block) {
        const std::uint64_t count = std::min(block, hi - base + 1);
        results.assign(count, std::nullopt);
        errors.assign(count, nullptr);
        const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto slot = static_cast<std::size_t>(i);
            try {
                results[slot] = evaluate_identity(*def, base + slot, ctx);
            } catch (...) {
                errors[slot] = std::current_exception();
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            if (errors[i]) std::rethrow_exception(errors[i]);
            if (results[i]) {
                report.first_failure = std::move(results[i]);
                break;
            }
        }
    }

    if (report.first_failure) {
        report.status = VerificationStatus::Fail;
    } else if (first > lo) {
        report.status = VerificationStatus::Partial;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

VerificationReport verify(std::string_view identity, Profile profile, const VerifyOptions& options) {
    const IdentityDefinition* def = find_identity(identity);
    if (def == nullptr) raise(ErrorCode::UnknownIdentity, "'" + std::string(identity) + "'");
    const IndexRange r = profile_range(*def, profile);
    return verify(identity, r.lo, r.hi, options);
}

std::vector<VerificationReport> verify_all(Profile profile, const VerifyOptions& options) {
    std::vector<VerificationReport> reports;
    reports.reserve(kRegistry.size());
    for (const auto& def : kRegistry) reports.push_back(verify(def.name, profile, options));
    return reports;
}

} // namespace hooksum
