#pragma once

#include <cstdint>
#include <optional>

#include "hooksum/bignat.hpp"
#include "hooksum/partition.hpp"

namespace hooksum {

enum class HookSumMethod { Direct, Closed };
enum class S21Variant { Original, Rewritten };

/// S(k,l;n): sum of f^lambda over the (k,l) hook. The hook-formula counts
/// are evaluated in parallel and reduced in enumeration order.
BigNatural hook_sum_direct(HookBound h, std::uint64_t n);

/// Closed forms for the strips S(k,0;n), k in {2,3,4,5}:
///   k=2: C(n, floor(n/2))
///   k=3: sum_j C(n,2j) C_j
///   k=4: C_{floor((n+1)/2)} C_{ceil((n+1)/2)}
///   k=5: 6 sum_j C(n,2j) C_j (2j+2)! / ((j+2)! (j+3)!)
/// Other k throw Error(UnsupportedStrip).
BigNatural strip_sum_closed(std::uint32_t k, std::uint64_t n);

// 2^(n-1); n >= 1.
BigNatural hook_sum_closed_11(std::uint64_t n);

// sum_{r=0}^{n-1} C(n-r, floor((n-r)/2)) C(n, r)
BigNatural s21_r_sum(std::uint64_t n);
// sum_{k=1}^{floor(n/2)-1} n! / (k! (k+1)! (n-2k-2)! (n-k-1) (n-k)); empty for n < 4.
BigNatural s21_k_sum(std::uint64_t n);

/// S(2,1;n) from the two-sum expression (Original) or with the k-sum
/// replaced by a(n) - 1 (Rewritten). Both need n >= 2; the quarter is
/// checked to be exact.
BigNatural hook_sum_closed_21(std::uint64_t n, S21Variant variant = S21Variant::Original);

/// S(3,1;n) = (C(n, floor(n/2)) + sum_{j=0}^n a(j) C(n,j)) / 2, with a(0) = 1.
BigNatural hook_sum_closed_31(std::uint64_t n);

/// S*(2,2;n) over enumerate_star(n); n >= 4.
/// Closed: C_{m-1} C_m for n = 2m, (2m+1) C_m^2 / (m+2) for n = 2m+1.
BigNatural star_sum(std::uint64_t n, HookSumMethod method);

// Whether a closed form is available for the pair (either orientation).
bool has_closed_form(HookBound h);

// Dispatch used by the CLI. Closed on an unsupported pair throws
// Error(UnsupportedStrip); closed forms keep their own domain checks.
BigNatural hook_sum(HookBound h, std::uint64_t n, HookSumMethod method);

} // namespace hooksum
