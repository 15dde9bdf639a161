#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hooksum/characters.hpp"
#include "hooksum/report.hpp"

namespace hooksum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

using Json = nlohmann::ordered_json;

/// One computed value as emitted by the CLI.
struct OutputRecord {
    std::string query;
    Json parameters = Json::object();
    std::string value; // exact decimal
    std::string method;
};

Json to_json(const OutputRecord& r);
Json to_json(const VerificationReport& r);
// Record plus a "terms" array of {partition, multiplicity} in canonical order.
Json to_json(const CharacterSum& cs, OutputRecord record);

// Enumeration cap override; nullopt when unset. Error(InvalidSyntax) when malformed.
std::optional<std::uint64_t> enum_cap_from_env(const char* value);

/// Runs one command line (args excludes the program name). Output goes to
/// `out`, diagnostics to `err`. `env_cap` stands in for HOOKSUM_ENUM_CAP.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cap = std::nullopt);

} // namespace hooksum::cli
