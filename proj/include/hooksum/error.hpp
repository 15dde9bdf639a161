#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hooksum {

enum class ErrorCode {
    NotWeaklyDecreasing,
    InvalidSyntax,
    OutOfDomain,
    CapExceeded,
    UnsupportedStrip,
    NotDivisible,
    UnknownIdentity,
    InvalidRange,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code distinguishes domain errors from broken invariants.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

} // namespace hooksum
