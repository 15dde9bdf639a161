#include "hooksum/lattice_paths.hpp"

#include <string>

#include "hooksum/error.hpp"
#include "hooksum/hook_sums.hpp"
#include "hooksum/tableaux.hpp"

namespace hooksum {

LatticePath::LatticePath(PathKind kind, std::vector<Step> steps) : kind_(kind), steps_(std::move(steps)) {
    std::int64_t height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        switch (steps_[i]) {
        case Step::Up: ++height; break;
        case Step::Down: --height; break;
        case Step::Flat:
            if (kind_ == PathKind::Dyck) raise(ErrorCode::InvalidSyntax, "flat step in a Dyck path");
            break;
        }
        if (height < 0) {
            raise(ErrorCode::InvalidSyntax, "path goes below the axis at step " + std::to_string(i));
        }
    }
    if (height != 0) raise(ErrorCode::InvalidSyntax, "path does not return to the axis");
}

LatticePath parse_path(PathKind kind, std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'U': steps.push_back(Step::Up); break;
        case 'D': steps.push_back(Step::Down); break;
        case 'F': steps.push_back(Step::Flat); break;
        default: raise(ErrorCode::InvalidSyntax, "unknown step '" + std::string(1, c) + "'");
        }
    }
    return LatticePath(kind, std::move(steps));
}

std::string format_path(const LatticePath& p) {
    std::string out;
    out.reserve(p.length());
    for (Step s : p.steps()) out.push_back(static_cast<char>(s));
    return out;
}

namespace {

std::uint64_t resolve_cap(PathKind kind, std::uint64_t cap) {
    if (cap != 0) return cap;
    return kind == PathKind::Dyck ? kDefaultDyckCap : kDefaultMotzkinCap;
}

void check_cap(PathKind kind, std::uint64_t n, std::uint64_t cap) {
    if (n > cap) {
        raise(ErrorCode::CapExceeded, std::string(kind == PathKind::Dyck ? "Dyck" : "Motzkin") +
                                          " enumeration n=" + std::to_string(n) + " > cap " +
                                          std::to_string(cap));
    }
}

// Step choices at a position, in priority order.
template <typename F>
void for_each_step(PathKind kind, std::uint64_t length, std::uint64_t pos, std::uint64_t height, F&& f) {
    const std::uint64_t left_after = length - pos - 1;
    if (height + 1 <= left_after) f(Step::Up);
    if (kind == PathKind::Motzkin && height <= left_after) f(Step::Flat);
    if (height > 0) f(Step::Down);
}

struct Walker {
    std::uint64_t pos = 0;
    std::uint64_t height = 0;
    bool pending = false; // an Up seen, followed only by flats so far
    std::uint64_t humps = 0;

    Walker after(Step s) const {
        Walker w = *this;
        ++w.pos;
        switch (s) {
        case Step::Up: ++w.height; w.pending = true; break;
        case Step::Flat: break;
        case Step::Down:
            --w.height;
            if (w.pending) ++w.humps;
            w.pending = false;
            break;
        }
        return w;
    }
};

struct Tally {
    std::uint64_t paths = 0;
    std::uint64_t humps = 0;
};

void walk(PathKind kind, std::uint64_t length, const Walker& w, Tally& t) {
    if (w.pos == length) {
        ++t.paths;
        t.humps += w.humps;
        return;
    }
    for_each_step(kind, length, w.pos, w.height, [&](Step s) { walk(kind, length, w.after(s), t); });
}

Tally parallel_tally(PathKind kind, std::uint64_t length) {
    constexpr std::size_t kTargetFrontier = 512;
    std::vector<Walker> frontier{Walker{}};
    while (frontier.size() < kTargetFrontier && frontier.front().pos < length) {
        std::vector<Walker> next;
        for (const auto& w : frontier) {
            for_each_step(kind, length, w.pos, w.height, [&](Step s) { next.push_back(w.after(s)); });
        }
        frontier = std::move(next);
    }
    std::uint64_t paths = 0;
    std::uint64_t humps = 0;
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : paths, humps)
    for (std::int64_t i = 0; i < count; ++i) {
        Tally t;
        walk(kind, length, frontier[static_cast<std::size_t>(i)], t);
        paths += t.paths;
        humps += t.humps;
    }
    return {paths, humps};
}

void collect(PathKind kind, std::uint64_t length, std::uint64_t height, std::vector<Step>& prefix,
             std::vector<LatticePath>& out) {
    if (prefix.size() == length) {
        out.emplace_back(kind, prefix);
        return;
    }
    for_each_step(kind, length, prefix.size(), height, [&](Step s) {
        prefix.push_back(s);
        const std::uint64_t h = s == Step::Up ? height + 1 : s == Step::Down ? height - 1 : height;
        collect(kind, length, h, prefix, out);
        prefix.pop_back();
    });
}

std::uint64_t path_length(PathKind kind, std::uint64_t n) { return kind == PathKind::Dyck ? 2 * n : n; }

} // namespace

std::vector<LatticePath> enumerate_dyck(std::uint64_t n, std::uint64_t cap) {
    check_cap(PathKind::Dyck, n, cap);
    std::vector<LatticePath> out;
    std::vector<Step> prefix;
    collect(PathKind::Dyck, 2 * n, 0, prefix, out);
    return out;
}

std::vector<LatticePath> enumerate_motzkin(std::uint64_t n, std::uint64_t cap) {
    check_cap(PathKind::Motzkin, n, cap);
    std::vector<LatticePath> out;
    std::vector<Step> prefix;
    collect(PathKind::Motzkin, n, 0, prefix, out);
    return out;
}

std::uint64_t count_humps(const LatticePath& p) {
    std::uint64_t humps = 0;
    if (p.kind() == PathKind::Dyck) {
        for (std::size_t i = 0; i + 1 < p.length(); ++i) {
            if (p.steps()[i] == Step::Up && p.steps()[i + 1] == Step::Down) ++humps;
        }
        return humps;
    }
    bool pending = false;
    for (Step s : p.steps()) {
        if (s == Step::Up) {
            pending = true;
        } else if (s == Step::Down) {
            if (pending) ++humps;
            pending = false;
        }
    }
    return humps;
}

BigNatural total_humps(PathKind kind, std::uint64_t n, HumpMethod method, std::uint64_t cap) {
    if (method == HumpMethod::Enumerate) {
        check_cap(kind, n, resolve_cap(kind, cap));
        return BigNatural(static_cast<unsigned long>(parallel_tally(kind, path_length(kind, n)).humps));
    }
    if (kind == PathKind::Dyck) return n == 0 ? BigNatural(0) : binomial(2 * n - 1, n);
    BigNatural sum = 0;
    for (std::uint64_t j = 1; 2 * j <= n; ++j) sum += binomial(n, j) * binomial(n - j, j);
    return exact_div(sum, 2, "HM_" + std::to_string(n) + " half");
}

BigNatural count_paths(PathKind kind, std::uint64_t n, std::uint64_t cap) {
    check_cap(kind, n, resolve_cap(kind, cap));
    return BigNatural(static_cast<unsigned long>(parallel_tally(kind, path_length(kind, n)).paths));
}

VerificationReport verify_correspondences(std::uint64_t n, PathCaps caps) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{"hump-correspondences", n, n, VerificationStatus::Pass, std::nullopt, {}};
    auto check = [&](const BigNatural& lhs, const BigNatural& rhs, const char* note) {
        if (report.first_failure || lhs == rhs) return;
        report.status = VerificationStatus::Fail;
        report.first_failure = FailureRecord{n, to_decimal(lhs), to_decimal(rhs), note};
    };

    check(total_humps(PathKind::Motzkin, n, HumpMethod::Enumerate, caps.motzkin),
          hook_sum_direct({2, 1}, n) - 1, "HM_n = S(2,1;n) - 1");
    if (n >= 1) {
        check(total_humps(PathKind::Dyck, n, HumpMethod::Enumerate, caps.dyck),
              syt_count(hook_shape(static_cast<Part>(n), n)), "HD_n = f^(n,1^n)");
    }
    check(count_paths(PathKind::Dyck, n, caps.dyck), syt_count(rectangle_shape(static_cast<Part>(n), 2)),
          "#Dyck(n) = f^(n,n)");
    check(count_paths(PathKind::Motzkin, n, caps.motzkin), strip_sum_closed(3, n), "#Motzkin(n) = S(3,0;n)");

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace hooksum
