#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hooksum {

using Part = std::uint32_t;

/// A weakly decreasing sequence of positive parts. The empty sequence is
/// the unique partition of 0. Instances are only produced through
/// make_partition (or the enumerators), so the invariant always holds.
class Partition {
public:
    Partition() = default;

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::uint64_t size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    // i-th part, 0-based; 0 past the last row.
    Part part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    friend Partition make_partition(std::span<const Part>);
    friend Partition make_partition_unchecked(std::vector<Part>);

    std::vector<Part> parts_;
    std::uint64_t size_ = 0;
};

/// Strict-weak order for canonical containers: lexicographically
/// decreasing, so (3) precedes (2,1) precedes (1,1,1).
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// The (k, l) hook: partitions whose (k+1)-th part is at most l.
struct HookBound {
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    friend bool operator==(const HookBound&, const HookBound&) = default;
};

// Trailing zeros are dropped; anything else out of order or zero throws
// Error(NotWeaklyDecreasing).
Partition make_partition(std::span<const Part> parts);
Partition make_partition(std::initializer_list<Part> parts);

// Only for callers that construct valid sequences by construction.
Partition make_partition_unchecked(std::vector<Part> parts);

Partition conjugate(const Partition& p);

bool in_hook(const Partition& p, HookBound h);

// All partitions of n inside the (k, l) hook, lexicographically decreasing.
std::vector<Partition> enumerate_hook(HookBound h, std::uint64_t n);

// All partitions of n (equivalent to enumerate_hook({n, 0}, n)).
std::vector<Partition> enumerate_all(std::uint64_t n);

// Rectangular-arm/leg subfamily of the (2,2) hook; n >= 4, else
// Error(OutOfDomain). For n = 2m: (k+2, k+2, 2^(m-2-k)); for n = 2m+1:
// (k+3, k+2, 2^(m-2-k)); k = 0..m-2. Returned in increasing k.
std::vector<Partition> enumerate_star(std::uint64_t n);

// Row-major table, rows[i][j] = hook length of cell (i, j) (0-based).
std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& p);

// Common shapes.
Partition row_shape(Part n);                       // (n)
Partition column_shape(std::size_t n);             // (1^n)
Partition rectangle_shape(Part width, std::size_t height);
Partition double_hook_shape(Part k, std::size_t n); // (k, k, 1^(n-2k))
Partition hook_shape(Part arm, std::size_t legs);   // (arm, 1^legs)

/// Textual form: comma-separated parts with optional "b^e" tokens for e
/// copies of b, e.g. "4,2^3,1". Surrounding parentheses and whitespace
/// are accepted; "" and "()" denote the empty partition.
Partition parse_partition(std::string_view text);

// Canonical CLI form: plain comma-separated parts, "" for the empty partition.
std::string format_partition(const Partition& p);

// Human form: "(4,2,2,2,1)", "()" for the empty partition.
std::string display_partition(const Partition& p);

} // namespace hooksum
