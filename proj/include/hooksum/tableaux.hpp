#pragma once

#include <cstdint>

#include "hooksum/bignat.hpp"
#include "hooksum/partition.hpp"

namespace hooksum {

inline constexpr std::uint64_t kDefaultTableauCap = 16;
// Counts in the backtracking oracle are accumulated in 64 bits; f^lambda is
// at most sqrt(n!) which stays below 2^64 up to n = 34.
inline constexpr std::uint64_t kMaxTableauCap = 34;

/// f^lambda by the hook length formula. The quotient n! / prod(hooks) is
/// evaluated on prime exponent vectors, so no big division happens.
BigNatural syt_count(const Partition& p);

/// f^(k,k,1^(n-2k)) = n! / ((k-1)! k! (n-2k)! (n-k) (n-k+1)).
/// Requires 1 <= k and 2k <= n, else Error(OutOfDomain).
BigNatural syt_count_double_hook(std::uint64_t k, std::uint64_t n);

/// f^(n,1^n) = C(2n-1, n); n >= 1.
BigNatural syt_count_hook_shape(std::uint64_t n);

/// Brute-force count of standard fillings by backtracking, parallel over
/// the placement prefixes of the first few entries. Throws
/// Error(CapExceeded) when |p| > cap (or cap exceeds kMaxTableauCap).
BigNatural syt_enumerate_count(const Partition& p, std::uint64_t cap = kDefaultTableauCap);

} // namespace hooksum
