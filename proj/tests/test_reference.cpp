#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hooksum/hook_sums.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/reference.hpp"

// Parallel kernels against their serial references on randomized inputs.

using namespace hooksum;

TEST_CASE("tableau oracle: parallel vs serial on random shapes") {
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 60; ++trial) {
        const auto shapes = enumerate_all(1 + rng() % 14);
        const Partition& p = shapes[rng() % shapes.size()];
        CHECK_MESSAGE(syt_enumerate_count(p) == reference::syt_enumerate_count(p), display_partition(p));
        CHECK(syt_enumerate_count(p) == syt_count(p));
    }
}

TEST_CASE("direct hook sums: parallel vs serial on random bounds") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const HookBound h{static_cast<std::uint32_t>(rng() % 5), static_cast<std::uint32_t>(rng() % 4)};
        const std::uint64_t n = rng() % 30;
        CHECK(hook_sum_direct(h, n) == reference::hook_sum_direct(h, n));
    }
}

TEST_CASE("hump totals: parallel vs serial") {
    for (std::uint64_t n = 0; n <= 11; ++n) {
        CHECK(total_humps(PathKind::Dyck, n, HumpMethod::Enumerate) == reference::total_humps_enumerate(PathKind::Dyck, n));
    }
    for (std::uint64_t n = 0; n <= 13; ++n) {
        CHECK(total_humps(PathKind::Motzkin, n, HumpMethod::Enumerate) ==
              reference::total_humps_enumerate(PathKind::Motzkin, n));
    }
}

TEST_CASE("verify: parallel scan vs in-order scan") {
    for (const auto& def : identity_registry()) {
        const IndexRange r = def.quick;
        const std::uint64_t hi = std::min<std::uint64_t>(r.hi, r.lo + 30);
        const auto par = verify(def.name, r.lo, hi);
        const auto ser = reference::verify(def.name, r.lo, hi);
        CHECK_MESSAGE(par.status == ser.status, def.name);
        CHECK(par.first_failure == ser.first_failure);
    }
}
