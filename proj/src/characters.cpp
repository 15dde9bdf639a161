#include "hooksum/characters.hpp"

#include <string>
#include <vector>

#include "hooksum/error.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum {

CharacterSum CharacterSum::irreducible(const Partition& p) {
    CharacterSum cs(p.size());
    cs.add(p);
    return cs;
}

std::uint64_t CharacterSum::multiplicity(const Partition& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void CharacterSum::add(const Partition& p, std::uint64_t mult) {
    if (p.size() != level_) {
        raise(ErrorCode::OutOfDomain, "character of " + display_partition(p) +
                                          " added to a sum of level " + std::to_string(level_));
    }
    if (mult == 0) return;
    terms_[p] += mult;
}

CharacterSum& CharacterSum::operator+=(const CharacterSum& other) {
    if (other.empty()) return *this;
    if (empty() && level_ != other.level_) level_ = other.level_;
    for (const auto& [p, mult] : other.terms_) add(p, mult);
    return *this;
}

CharacterSum CharacterSum::doubled() const {
    CharacterSum out = *this;
    for (auto& [p, mult] : out.terms_) mult *= 2;
    return out;
}

namespace {

// Distributes increments d_2..d_{L+1} over rows 1..L (0-based) within the
// interlacing gaps; the leftover goes to the first row.
void interlace(const Partition& lambda, std::uint64_t n, std::size_t row, std::uint64_t used,
               std::vector<Part>& mu, CharacterSum& out) {
    const std::size_t rows = lambda.length() + 1;
    if (row == rows) {
        std::vector<Part> parts = mu;
        parts[0] = static_cast<Part>(lambda.part(0) + (n - used));
        out.add(make_partition(parts));
        return;
    }
    const Part gap = lambda.part(row - 1) - lambda.part(row);
    for (Part d = 0; d <= gap && used + d <= n; ++d) {
        mu[row] = lambda.part(row) + d;
        interlace(lambda, n, row + 1, used + d, mu, out);
    }
}

} // namespace

CharacterSum young_outer_one_row(const Partition& lambda, std::uint64_t n) {
    CharacterSum out(lambda.size() + n);
    if (n == 0) {
        out.add(lambda);
        return out;
    }
    std::vector<Part> mu(lambda.length() + 1, 0);
    interlace(lambda, n, 1, 0, mu, out);
    return out;
}

CharacterSum outer_with_one_row(const CharacterSum& cs, std::uint64_t n) {
    if (n == 0) return cs;
    CharacterSum out(cs.level() + n);
    for (const auto& [lambda, mult] : cs.terms()) {
        const CharacterSum expanded = young_outer_one_row(lambda, n);
        for (const auto& [mu, m] : expanded.terms()) out.add(mu, m * mult);
    }
    return out;
}

CharacterSum psi(std::uint64_t n) {
    CharacterSum out(n);
    if (n == 0) {
        out.add(Partition{});
        return out;
    }
    for (std::uint64_t k = 1; 2 * k <= n; ++k) out.add(double_hook_shape(static_cast<Part>(k), n));
    return out;
}

CharacterSum omega(std::uint64_t n) {
    CharacterSum out(n);
    for (std::uint64_t j = 0; j <= n; ++j) out += outer_with_one_row(psi(j), n - j);
    return out;
}

CharacterSum chi_hook(HookBound h, std::uint64_t n) {
    CharacterSum out(n);
    for (const auto& p : enumerate_hook(h, n)) out.add(p);
    return out;
}

BigNatural degree(const CharacterSum& cs) {
    BigNatural total = 0;
    for (const auto& [p, mult] : cs.terms()) total += syt_count(p) * static_cast<unsigned long>(mult);
    return total;
}

VerificationReport verify_p3(std::uint64_t n) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{"p3", n, n, VerificationStatus::Pass, std::nullopt, {}};

    const CharacterSum om = omega(n);
    const CharacterSum lhs = chi_hook({2, 0}, n) + om;
    const CharacterSum rhs = chi_hook({3, 1}, n).doubled();

    auto fail = [&](const Partition& p, std::uint64_t l, std::uint64_t r, std::string note) {
        report.status = VerificationStatus::Fail;
        report.first_failure = FailureRecord{n, format_partition(p) + ":" + std::to_string(l),
                                             format_partition(p) + ":" + std::to_string(r),
                                             std::move(note)};
    };

    // Walk the union of keys in canonical order so the first failure is well defined.
    CharacterSum::Terms keys = lhs.terms();
    for (const auto& [p, m] : rhs.terms()) keys.emplace(p, m);
    for (const auto& [p, unused] : keys) {
        const std::uint64_t l = lhs.multiplicity(p);
        const std::uint64_t r = rhs.multiplicity(p);
        if (l != r) {
            fail(p, l, r, "chi(2,0;n) + Omega(n) != 2 chi(3,1;n)");
            break;
        }
        const std::uint64_t c = om.multiplicity(p);
        if (c != 1 && c != 2) {
            fail(p, c, 1, "Omega(n) coefficient outside {1,2}");
            break;
        }
        if ((c == 1) != (p.length() <= 2)) {
            fail(p, c, p.length() <= 2 ? 1 : 2, "Omega(n) coefficient 1 iff at most two rows");
            break;
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace hooksum
