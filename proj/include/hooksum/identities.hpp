#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hooksum/bignat.hpp"
#include "hooksum/lattice_paths.hpp"
#include "hooksum/report.hpp"

namespace hooksum {

enum class Profile { Quick, Full };

struct IndexRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Tables shared by every index of one run; built before the scan and
// read-only during it.
struct IdentityContext {
    std::vector<BigNatural> a; // a(0..hi+1) by the recurrence
    PathCaps caps;
};

using IdentityCheck = std::optional<FailureRecord> (*)(std::uint64_t index, const IdentityContext&);

/// One registered identity. `sides` documents which kernels evaluate each
/// side; the sides never share a code path.
struct IdentityDefinition {
    std::string_view name;
    std::string_view statement;
    std::string_view sides;
    std::uint64_t domain_min;
    IndexRange quick;
    IndexRange full;
    IdentityCheck check;
};

std::span<const IdentityDefinition> identity_registry();

// nullptr when the name is not registered.
const IdentityDefinition* find_identity(std::string_view name);

struct VerifyOptions {
    PathCaps caps;
};

/// Evaluates the identity at every index of [lo, hi] and stops at the first
/// failure. Indices are evaluated in parallel blocks; the reported failure
/// is always the smallest failing index. Divisibility failures are reported
/// as failures at their index. Indices below the identity's domain are
/// skipped and yield status Partial.
/// Errors: UnknownIdentity, InvalidRange (lo > hi, or hi below the domain).
VerificationReport verify(std::string_view identity, std::uint64_t lo, std::uint64_t hi,
                          const VerifyOptions& options = {});

// Same, over the identity's profile range.
VerificationReport verify(std::string_view identity, Profile profile, const VerifyOptions& options = {});

// Every registered identity over its profile range; one failing identity
// does not stop the others.
std::vector<VerificationReport> verify_all(Profile profile, const VerifyOptions& options = {});

IndexRange profile_range(const IdentityDefinition& def, Profile profile);

// One index; NotDivisible errors become failure records, other errors propagate.
std::optional<FailureRecord> evaluate_identity(const IdentityDefinition& def, std::uint64_t index,
                                               const IdentityContext& ctx);

// Builds the shared tables for a scan up to `hi`.
IdentityContext make_identity_context(std::uint64_t hi, const VerifyOptions& options);

} // namespace hooksum
