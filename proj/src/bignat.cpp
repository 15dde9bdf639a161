#include "hooksum/bignat.hpp"

#include <algorithm>
#include <cctype>

#include "hooksum/error.hpp"

namespace hooksum {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::InvalidSyntax: return "InvalidSyntax";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnsupportedStrip: return "UnsupportedStrip";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::InvalidRange: return "InvalidRange";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(to_string(code)) + ": " + what);
}

BigNatural factorial(std::uint64_t n) {
    BigNatural r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<BigNatural> factorial_table(std::uint64_t hi) {
    std::vector<BigNatural> f(hi + 1);
    f[0] = 1;
    for (std::uint64_t i = 1; i <= hi; ++i) f[i] = f[i - 1] * static_cast<unsigned long>(i);
    return f;
}

BigNatural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigNatural r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigNatural binomial_signed(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

BigNatural power_of_two(std::uint64_t e) {
    BigNatural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

bool divides(const BigNatural& denominator, const BigNatural& numerator) {
    if (denominator == 0) return false;
    return mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()) != 0;
}

BigNatural exact_div(const BigNatural& numerator, const BigNatural& denominator,
                     std::string_view context) {
    if (!divides(denominator, numerator)) {
        raise(ErrorCode::NotDivisible,
              std::string(context) + ": " + to_decimal(numerator) + " is not divisible by " +
                  to_decimal(denominator));
    }
    BigNatural q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

std::string to_decimal(const BigNatural& value) { return value.get_str(10); }

BigNatural parse_decimal(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        raise(ErrorCode::InvalidSyntax, "not a decimal natural: '" + std::string(text) + "'");
    }
    return BigNatural(std::string(text), 10);
}

} // namespace hooksum
