#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hooksum/bignat.hpp"
#include "hooksum/report.hpp"

namespace hooksum {

enum class Step : char { Up = 'U', Down = 'D', Flat = 'F' };
enum class PathKind { Dyck, Motzkin };
enum class HumpMethod { Enumerate, Closed };

inline constexpr std::uint64_t kDefaultDyckCap = 14;
inline constexpr std::uint64_t kDefaultMotzkinCap = 16;

/// A path that never goes below the axis and ends on it. Dyck paths carry
/// no flat steps.
class LatticePath {
public:
    LatticePath() = default;

    // Validates the prefix invariant and the kind; Error(InvalidSyntax) otherwise.
    LatticePath(PathKind kind, std::vector<Step> steps);

    PathKind kind() const noexcept { return kind_; }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    std::size_t length() const noexcept { return steps_.size(); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    PathKind kind_ = PathKind::Dyck;
    std::vector<Step> steps_;
};

// "UFD" style text form.
LatticePath parse_path(PathKind kind, std::string_view text);
std::string format_path(const LatticePath& p);

// Depth-first, step priority Up > Flat > Down.
std::vector<LatticePath> enumerate_dyck(std::uint64_t n, std::uint64_t cap = kDefaultDyckCap);
std::vector<LatticePath> enumerate_motzkin(std::uint64_t n, std::uint64_t cap = kDefaultMotzkinCap);

// Dyck: adjacent Up,Down pairs. Motzkin: maximal Up,Flat*,Down segments.
std::uint64_t count_humps(const LatticePath& p);

/// Total humps over all paths of the kind: Dyck paths of length 2n, Motzkin
/// paths of length n. Enumerate walks every path (parallel over prefix
/// subtrees, subject to the cap); Closed uses HD_n = C(2n-1, n) (0 at n = 0)
/// and HM_n = (1/2) sum_{j=1}^{floor(n/2)} C(n,j) C(n-j,j), halving checked.
BigNatural total_humps(PathKind kind, std::uint64_t n, HumpMethod method,
                       std::uint64_t cap = 0 /* 0: kind default */);

// Path counts without materializing paths; same traversal as total_humps.
BigNatural count_paths(PathKind kind, std::uint64_t n, std::uint64_t cap = 0);

struct PathCaps {
    std::uint64_t dyck = kDefaultDyckCap;
    std::uint64_t motzkin = kDefaultMotzkinCap;
};

/// (i) HM_n = S(2,1;n) - 1, (ii) HD_n = f^(n,1^n) and #Dyck(n) = f^(n,n),
/// (iii) #Motzkin(n) = S(3,0;n), all with enumerated left sides. At n = 0
/// the hook shape (n,1^n) degenerates and the HD_n check is skipped.
VerificationReport verify_correspondences(std::uint64_t n, PathCaps caps = {});

} // namespace hooksum
