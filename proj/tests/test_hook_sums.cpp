#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hooksum/error.hpp"
#include "hooksum/hook_sums.hpp"
#include "hooksum/motzkin.hpp"
#include "hooksum/reference.hpp"
#include "hooksum/tableaux.hpp"

using namespace hooksum;

namespace {

// S(k,l;n) through the backtracking oracle only.
BigNatural oracle_sum(HookBound h, std::uint64_t n) {
    BigNatural total = 0;
    for (const auto& p : enumerate_hook(h, n)) total += syt_enumerate_count(p);
    return total;
}

} // namespace

TEST_CASE("hook_sum_direct examples") {
    CHECK(hook_sum_direct({2, 1}, 3) == 4);
    CHECK(hook_sum_direct({3, 1}, 2) == 2);
    for (std::uint32_t k = 0; k <= 3; ++k) {
        for (std::uint32_t l = 0; l <= 3; ++l) CHECK(hook_sum_direct({k, l}, 0) == 1);
    }
    CHECK(hook_sum_direct({0, 0}, 3) == 0);
    // Involutions of S_n when the hook is unconstrained.
    const std::uint64_t involutions[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
    for (std::uint32_t n = 0; n <= 10; ++n) CHECK(hook_sum_direct({n, 0}, n) == involutions[n]);
}

TEST_CASE("parallel and serial direct sums agree") {
    for (std::uint64_t n = 0; n <= 24; ++n) {
        for (HookBound h : {HookBound{2, 1}, HookBound{3, 1}, HookBound{2, 2}, HookBound{5, 0}}) {
            CHECK(hook_sum_direct(h, n) == reference::hook_sum_direct(h, n));
        }
    }
}

TEST_CASE("strip closed forms") {
    CHECK(strip_sum_closed(2, 4) == 6);
    CHECK(strip_sum_closed(3, 4) == 9);
    CHECK(strip_sum_closed(5, 3) == 4);
    for (std::uint32_t bad : {0u, 1u, 6u, 7u}) {
        try {
            strip_sum_closed(bad, 5);
            FAIL("expected UnsupportedStrip");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedStrip);
        }
    }
    for (std::uint32_t k = 2; k <= 5; ++k) {
        for (std::uint64_t n = 0; n <= 24; ++n) CHECK(strip_sum_closed(k, n) == hook_sum_direct({k, 0}, n));
        for (std::uint64_t n = 0; n <= 9; ++n) CHECK(strip_sum_closed(k, n) == oracle_sum({k, 0}, n));
    }
}

TEST_CASE("strip sums against Motzkin and Catalan numbers") {
    const auto m = motzkin_number_table(60);
    for (std::uint64_t n = 0; n <= 60; ++n) CHECK(strip_sum_closed(3, n) == m[n]);
    for (std::uint64_t k = 1; k <= 50; ++k) {
        CHECK(strip_sum_closed(4, 2 * k - 1) == catalan(k) * catalan(k));
        CHECK(strip_sum_closed(4, 2 * k) == catalan(k) * catalan(k + 1));
    }
}

TEST_CASE("S(1,1;n)") {
    CHECK(hook_sum_closed_11(1) == 1);
    CHECK(hook_sum_closed_11(4) == 8);
    CHECK(hook_sum_closed_11(5) == 16);
    CHECK(hook_sum_direct({1, 1}, 5) == 16);
    CHECK_THROWS_AS(hook_sum_closed_11(0), Error);
    for (std::uint64_t n = 1; n <= 30; ++n) CHECK(hook_sum_closed_11(n) == hook_sum_direct({1, 1}, n));
}

TEST_CASE("S(2,1;n) closed forms") {
    CHECK(hook_sum_closed_21(2) == 2);
    CHECK(hook_sum_closed_21(3) == 4);
    CHECK(hook_sum_closed_21(4) == 10);
    CHECK(hook_sum_closed_21(4, S21Variant::Rewritten) == 10);
    CHECK(s21_r_sum(4) == 34);
    CHECK(s21_k_sum(3) == 0);
    CHECK_THROWS_AS(hook_sum_closed_21(1), Error);
    CHECK_THROWS_AS(hook_sum_closed_21(0, S21Variant::Rewritten), Error);
    for (std::uint64_t n = 2; n <= 30; ++n) {
        const BigNatural direct = hook_sum_direct({2, 1}, n);
        CHECK(hook_sum_closed_21(n, S21Variant::Original) == direct);
        CHECK(hook_sum_closed_21(n, S21Variant::Rewritten) == direct);
    }
}

TEST_CASE("S(3,1;n) half-sum") {
    CHECK(hook_sum_closed_31(0) == 1);
    CHECK(hook_sum_closed_31(2) == 2);
    CHECK(hook_sum_closed_31(3) == 4);
    for (std::uint64_t n = 0; n <= 30; ++n) CHECK(hook_sum_closed_31(n) == hook_sum_direct({3, 1}, n));
}

TEST_CASE("star sums") {
    CHECK(star_sum(4, HookSumMethod::Direct) == 2);
    CHECK(star_sum(4, HookSumMethod::Closed) == 2);
    CHECK(star_sum(5, HookSumMethod::Direct) == 5);
    CHECK(star_sum(5, HookSumMethod::Closed) == 5);
    CHECK(star_sum(7, HookSumMethod::Direct) == 35);
    CHECK(star_sum(7, HookSumMethod::Closed) == 35);
    CHECK_THROWS_AS(star_sum(3, HookSumMethod::Direct), Error);
    CHECK_THROWS_AS(star_sum(3, HookSumMethod::Closed), Error);
    for (std::uint64_t n = 4; n <= 60; ++n) {
        CHECK(star_sum(n, HookSumMethod::Direct) == star_sum(n, HookSumMethod::Closed));
    }
}

TEST_CASE("conjugation symmetry and saturation of direct sums") {
    for (std::uint64_t n = 0; n <= 12; ++n) {
        for (std::uint32_t k = 0; k <= 3; ++k) {
            for (std::uint32_t l = 0; l <= 3; ++l) CHECK(hook_sum_direct({k, l}, n) == hook_sum_direct({l, k}, n));
        }
        const BigNatural full = hook_sum_direct({static_cast<std::uint32_t>(n), 0}, n);
        BigNatural previous = 0;
        for (std::uint32_t k = 0; k <= n + 2; ++k) {
            const BigNatural s = hook_sum_direct({k, 0}, n);
            CHECK(s >= previous);
            if (k >= n) CHECK(s == full);
            previous = s;
        }
    }
}

TEST_CASE("dispatch") {
    CHECK(has_closed_form({2, 1}));
    CHECK(has_closed_form({1, 2}));
    CHECK(has_closed_form({0, 4}));
    CHECK_FALSE(has_closed_form({2, 2}));
    CHECK_FALSE(has_closed_form({6, 0}));
    CHECK(hook_sum({1, 2}, 6, HookSumMethod::Closed) == hook_sum_direct({2, 1}, 6));
    CHECK(hook_sum({1, 3}, 6, HookSumMethod::Closed) == hook_sum_direct({3, 1}, 6));
    CHECK_THROWS_AS(hook_sum({2, 2}, 6, HookSumMethod::Closed), Error);
}
