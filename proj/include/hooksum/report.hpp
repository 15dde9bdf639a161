#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hooksum {

enum class VerificationStatus { Pass, Fail, Partial };

std::string_view to_string(VerificationStatus s) noexcept;

struct FailureRecord {
    std::uint64_t index = 0;
    std::string lhs;
    std::string rhs;
    // Which pair of sides disagreed, or what could not be evaluated.
    std::string note;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

/// Outcome of checking one identity over an inclusive index range.
/// status is Pass iff there is no failure and every index in [lo, hi] was
/// evaluated; Partial means no failure but part of the range lay outside
/// the identity's domain and was skipped.
struct VerificationReport {
    std::string identity;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    VerificationStatus status = VerificationStatus::Pass;
    std::optional<FailureRecord> first_failure;
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return status != VerificationStatus::Fail; }
};

} // namespace hooksum
