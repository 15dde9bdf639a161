#pragma once

#include <cstdint>
#include <map>

#include "hooksum/bignat.hpp"
#include "hooksum/partition.hpp"
#include "hooksum/report.hpp"

namespace hooksum {

/// Formal sum of irreducible S_n characters: partition -> positive
/// multiplicity, all keys of size `level`. Iteration follows the canonical
/// (lexicographically decreasing) partition order.
class CharacterSum {
public:
    using Terms = std::map<Partition, std::uint64_t, CanonicalOrder>;

    explicit CharacterSum(std::uint64_t level = 0) : level_(level) {}

    // The irreducible chi^lambda.
    static CharacterSum irreducible(const Partition& p);

    std::uint64_t level() const noexcept { return level_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::uint64_t multiplicity(const Partition& p) const;

    // Adds `mult` copies of chi^p; p must have size level(), else
    // Error(OutOfDomain). A zero multiplicity is a no-op.
    void add(const Partition& p, std::uint64_t mult = 1);

    CharacterSum& operator+=(const CharacterSum& other);
    friend CharacterSum operator+(CharacterSum a, const CharacterSum& b) { return a += b; }
    CharacterSum doubled() const;

    friend bool operator==(const CharacterSum&, const CharacterSum&) = default;

private:
    std::uint64_t level_;
    Terms terms_;
};

// Young's rule: chi^lambda (x) chi^(n) = sum over mu in lambda^{+n}, i.e.
// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ..., |mu| = |lambda| + n.
CharacterSum young_outer_one_row(const Partition& lambda, std::uint64_t n);

// Linear extension of young_outer_one_row; n = 0 returns the input.
CharacterSum outer_with_one_row(const CharacterSum& cs, std::uint64_t n);

// Psi(n) = sum_{k>=1, 2k<=n} chi^(k,k,1^(n-2k)); Psi(0) is the trivial character.
CharacterSum psi(std::uint64_t n);

// Omega(n) = sum_{j=0}^n Psi(j) (x) chi^(n-j).
CharacterSum omega(std::uint64_t n);

// chi(k,l;n): every partition of the (k,l) hook with multiplicity 1.
CharacterSum chi_hook(HookBound h, std::uint64_t n);

// sum mult(lambda) f^lambda
BigNatural degree(const CharacterSum& cs);

/// Checks chi(2,0;n) + Omega(n) = 2 chi(3,1;n) term by term, that every
/// coefficient of Omega(n) is 1 or 2, and that it is 1 exactly on
/// partitions with at most two rows. The first offending partition is
/// reported in the failure record.
VerificationReport verify_p3(std::uint64_t n);

} // namespace hooksum
