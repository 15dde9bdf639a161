#pragma once

#include <cstdint>
#include <vector>

#include "hooksum/bignat.hpp"

namespace hooksum {

enum class SequenceMethod { Explicit, Recurrence };

/// Motzkin-sums function a(n), the degree of the Motzkin-sums character.
///
/// Explicit: a(n) = sum_{k=1}^{floor(n/2)} n! / ((k-1)! k! (n-2k)! (n-k) (n-k+1)).
/// Recurrence: a(1) = 0, a(2) = 1, a(n) = (n-1)(2a(n-1) + 3a(n-2)) / (n+1),
/// where the division by n+1 is checked to be exact.
///
/// Both use a(0) = 1: the trivial character of the empty group has degree 1,
/// and the half-sum formula for S(3,1;n) needs that j = 0 term.
BigNatural motzkin_sum_a(std::uint64_t n, SequenceMethod method = SequenceMethod::Explicit);

// a(0..hi) in one ascending pass.
std::vector<BigNatural> motzkin_sum_table(std::uint64_t hi,
                                          SequenceMethod method = SequenceMethod::Recurrence);

// M_n = a(n) + a(n+1).
BigNatural motzkin_number(std::uint64_t n);
std::vector<BigNatural> motzkin_number_table(std::uint64_t hi);

BigNatural catalan(std::uint64_t n);

// 4 a(n) / M_n as a double, converted once from the exact rational; n >= 1.
double asymptotic_ratio(std::uint64_t n);

/// Immutable ascending snapshot of a(0..hi) and M_0..M_hi. Safe to read
/// from any number of threads once constructed.
class MotzkinTable {
public:
    explicit MotzkinTable(std::uint64_t hi);

    std::uint64_t max_index() const noexcept { return a_.size() - 2; }
    const BigNatural& a(std::uint64_t n) const { return a_.at(n); }
    BigNatural motzkin(std::uint64_t n) const { return a_.at(n) + a_.at(n + 1); }

private:
    std::vector<BigNatural> a_; // holds one extra entry so motzkin(hi) is defined
};

} // namespace hooksum
