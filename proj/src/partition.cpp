#include "hooksum/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "hooksum/error.hpp"

namespace hooksum {

Partition make_partition_unchecked(std::vector<Part> parts) {
    Partition p;
    p.size_ = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
    p.parts_ = std::move(parts);
    return p;
}

Partition make_partition(std::span<const Part> parts) {
    std::size_t len = parts.size();
    while (len > 0 && parts[len - 1] == 0) --len;
    for (std::size_t i = 0; i < len; ++i) {
        if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1])) {
            std::string seq;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (j) seq += ',';
                seq += std::to_string(parts[j]);
            }
            raise(ErrorCode::NotWeaklyDecreasing, "[" + seq + "] at position " + std::to_string(i));
        }
    }
    return make_partition_unchecked(std::vector<Part>(parts.begin(), parts.begin() + len));
}

Partition make_partition(std::initializer_list<Part> parts) {
    return make_partition(std::span<const Part>(parts.begin(), parts.size()));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<Part> cols(p.part(0), 0);
    for (Part row : p.parts()) {
        for (Part j = 0; j < row; ++j) ++cols[j];
    }
    return make_partition_unchecked(std::move(cols));
}

bool in_hook(const Partition& p, HookBound h) { return p.part(h.k) <= h.l; }

namespace {

struct HookEnumerator {
    HookBound bound;
    std::vector<Part> current;
    std::vector<Partition>& out;

    // Largest part allowed at row `row` given the previous part.
    Part cap_at(std::size_t row, Part prev) const {
        return row >= bound.k ? std::min<Part>(prev, bound.l) : prev;
    }

    // Whether `remaining` can be distributed over rows >= row with parts <= prev.
    bool feasible(std::size_t row, std::uint64_t remaining, Part prev) const {
        if (remaining == 0) return true;
        if (bound.l > 0) return cap_at(row, prev) > 0;
        if (row >= bound.k) return false;
        return remaining <= static_cast<std::uint64_t>(bound.k - row) * prev;
    }

    void run(std::uint64_t remaining, Part prev) {
        if (remaining == 0) {
            out.push_back(make_partition_unchecked(current));
            return;
        }
        const std::size_t row = current.size();
        const Part top = static_cast<Part>(std::min<std::uint64_t>(cap_at(row, prev), remaining));
        for (Part v = top; v >= 1; --v) {
            if (!feasible(row + 1, remaining - v, v)) continue;
            current.push_back(v);
            run(remaining - v, v);
            current.pop_back();
        }
    }
};

} // namespace

std::vector<Partition> enumerate_hook(HookBound h, std::uint64_t n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    const Part first = static_cast<Part>(std::min<std::uint64_t>(n, std::numeric_limits<Part>::max()));
    HookEnumerator e{h, {}, out};
    if (e.feasible(0, n, first)) e.run(n, first);
    return out;
}

std::vector<Partition> enumerate_all(std::uint64_t n) {
    return enumerate_hook({static_cast<std::uint32_t>(n), 0}, n);
}

std::vector<Partition> enumerate_star(std::uint64_t n) {
    if (n < 4) raise(ErrorCode::OutOfDomain, "star partitions need n >= 4, got " + std::to_string(n));
    const std::uint64_t m = n / 2;
    const bool odd = (n % 2) == 1;
    std::vector<Partition> out;
    out.reserve(m - 1);
    for (std::uint64_t k = 0; k + 2 <= m; ++k) {
        std::vector<Part> parts;
        parts.push_back(static_cast<Part>(k + (odd ? 3 : 2)));
        parts.push_back(static_cast<Part>(k + 2));
        parts.insert(parts.end(), m - 2 - k, Part{2});
        out.push_back(make_partition_unchecked(std::move(parts)));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& p) {
    const Partition c = conjugate(p);
    std::vector<std::vector<std::uint32_t>> table(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        const Part row = p.part(i);
        table[i].resize(row);
        for (Part j = 0; j < row; ++j) {
            // arm + leg + 1 with 0-based indices
            table[i][j] = (row - j - 1) + static_cast<std::uint32_t>(c.part(j) - i - 1) + 1;
        }
    }
    return table;
}

Partition row_shape(Part n) {
    return n == 0 ? Partition{} : make_partition_unchecked({n});
}

Partition column_shape(std::size_t n) { return make_partition_unchecked(std::vector<Part>(n, 1)); }

Partition rectangle_shape(Part width, std::size_t height) {
    if (width == 0) return {};
    return make_partition_unchecked(std::vector<Part>(height, width));
}

Partition double_hook_shape(Part k, std::size_t n) {
    if (k == 0 || 2 * static_cast<std::size_t>(k) > n) {
        raise(ErrorCode::OutOfDomain, "double hook (k,k,1^(n-2k)) needs 1 <= k and 2k <= n");
    }
    std::vector<Part> parts{k, k};
    parts.insert(parts.end(), n - 2 * static_cast<std::size_t>(k), Part{1});
    return make_partition(parts);
}

Partition hook_shape(Part arm, std::size_t legs) {
    if (arm == 0) {
        if (legs != 0) raise(ErrorCode::OutOfDomain, "hook with empty arm and nonempty leg");
        return {};
    }
    std::vector<Part> parts{arm};
    parts.insert(parts.end(), legs, Part{1});
    return make_partition_unchecked(std::move(parts));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_number(std::string_view token, std::string_view whole) {
    token = trim(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        raise(ErrorCode::InvalidSyntax, "bad partition token '" + std::string(token) + "' in '" +
                                            std::string(whole) + "'");
    }
    return value;
}

} // namespace

Partition parse_partition(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') raise(ErrorCode::InvalidSyntax, "unbalanced parentheses in '" + std::string(text) + "'");
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<Part> parts;
    if (body.empty()) return {};
    constexpr std::uint64_t kMaxPart = std::numeric_limits<Part>::max();
    constexpr std::uint64_t kMaxRows = 1u << 20;
    while (true) {
        const auto comma = body.find(',');
        const std::string_view token = body.substr(0, comma);
        const auto caret = token.find('^');
        const std::uint64_t base = parse_number(token.substr(0, caret), text);
        const std::uint64_t reps =
            caret == std::string_view::npos ? 1 : parse_number(token.substr(caret + 1), text);
        if (base > kMaxPart || reps > kMaxRows || parts.size() + reps > kMaxRows) {
            raise(ErrorCode::InvalidSyntax, "partition too large: '" + std::string(text) + "'");
        }
        parts.insert(parts.end(), reps, static_cast<Part>(base));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return make_partition(parts);
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.part(i));
    }
    return out;
}

std::string display_partition(const Partition& p) { return "(" + format_partition(p) + ")"; }

} // namespace hooksum
