#include "hooksum/reference.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hooksum/error.hpp"

namespace hooksum::reference {

namespace {

// Removes the largest entry from each corner in turn: every standard
// filling is reached exactly once, walking from the full shape down.
std::uint64_t count_by_corner_removal(std::vector<Part>& rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (rows.empty()) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
        if (!corner) continue;
        std::vector<Part> smaller = rows;
        --smaller[i];
        total += count_by_corner_removal(smaller);
    }
    return total;
}

} // namespace

BigNatural syt_enumerate_count(const Partition& p, std::uint64_t cap) {
    if (cap > kMaxTableauCap || p.size() > cap) {
        raise(ErrorCode::CapExceeded, "shape " + display_partition(p) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<Part> rows(p.parts().begin(), p.parts().end());
    return BigNatural(static_cast<unsigned long>(count_by_corner_removal(rows)));
}

BigNatural hook_sum_direct(HookBound h, std::uint64_t n) {
    BigNatural total = 0;
    for (const auto& p : enumerate_hook(h, n)) total += syt_count(p);
    return total;
}

BigNatural total_humps_enumerate(PathKind kind, std::uint64_t n, std::uint64_t cap) {
    const auto paths = kind == PathKind::Dyck ? enumerate_dyck(n, cap == 0 ? kDefaultDyckCap : cap)
                                              : enumerate_motzkin(n, cap == 0 ? kDefaultMotzkinCap : cap);
    std::uint64_t total = 0;
    for (const auto& path : paths) total += count_humps(path);
    return BigNatural(static_cast<unsigned long>(total));
}

VerificationReport verify(std::string_view identity, std::uint64_t lo, std::uint64_t hi,
                          const VerifyOptions& options) {
    const IdentityDefinition* def = find_identity(identity);
    if (def == nullptr) raise(ErrorCode::UnknownIdentity, "'" + std::string(identity) + "'");
    if (lo > hi || hi < def->domain_min) raise(ErrorCode::InvalidRange, "bad range for " + std::string(identity));
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{std::string(identity), lo, hi, VerificationStatus::Pass, std::nullopt, {}};
    const IdentityContext ctx = make_identity_context(hi, options);
    const std::uint64_t first = std::max(lo, def->domain_min);
    for (std::uint64_t i = first; i <= hi; ++i) {
        if (auto failure = evaluate_identity(*def, i, ctx)) {
            report.first_failure = std::move(failure);
            break;
        }
    }
    report.status = report.first_failure ? VerificationStatus::Fail
                    : first > lo         ? VerificationStatus::Partial
                                         : VerificationStatus::Pass;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace hooksum::reference
