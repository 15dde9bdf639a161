#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <vector>

#include <gmpxx.h>

namespace hooksum {

// Arbitrary-precision integer. Every count in the library is nonnegative,
// but intermediate expressions such as a(n) - 1 may pass through the
// signed range, so the underlying type stays mpz_class.
using BigNatural = mpz_class;

BigNatural factorial(std::uint64_t n);

// 0!, 1!, ..., hi! by running product.
std::vector<BigNatural> factorial_table(std::uint64_t hi);

// C(n, k); zero when k > n.
BigNatural binomial(std::uint64_t n, std::uint64_t k);

// C(n, k) for signed arguments: zero whenever k < 0, n < 0 or k > n.
BigNatural binomial_signed(std::int64_t n, std::int64_t k);

BigNatural power_of_two(std::uint64_t e);

// Quotient of an exact division. Throws Error(NotDivisible) with `context`
// in the message when the remainder is nonzero or the divisor is zero.
BigNatural exact_div(const BigNatural& numerator, const BigNatural& denominator,
                     std::string_view context);

bool divides(const BigNatural& denominator, const BigNatural& numerator);

std::string to_decimal(const BigNatural& value);

// Parses an unsigned decimal literal; throws Error(InvalidSyntax).
BigNatural parse_decimal(std::string_view text);

} // namespace hooksum
