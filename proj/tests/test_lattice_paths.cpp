#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hooksum/error.hpp"
#include "hooksum/hook_sums.hpp"
#include "hooksum/lattice_paths.hpp"
#include "hooksum/motzkin.hpp"
#include "hooksum/reference.hpp"

using namespace hooksum;

namespace {

std::vector<std::string> texts(const std::vector<LatticePath>& paths) {
    std::vector<std::string> out;
    for (const auto& p : paths) out.push_back(format_path(p));
    return out;
}

// Every word over the step alphabet of the right length, filtered by the
// prefix condition; sorted. Independent of the depth-first generator.
std::set<std::string> brute_paths(PathKind kind, std::size_t length) {
    const std::string alphabet = kind == PathKind::Dyck ? "UD" : "UDF";
    std::set<std::string> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < length; ++i) total *= alphabet.size();
    for (std::size_t code = 0; code < total; ++code) {
        std::string w;
        std::size_t c = code;
        int h = 0;
        bool ok = true;
        for (std::size_t i = 0; i < length; ++i) {
            const char s = alphabet[c % alphabet.size()];
            c /= alphabet.size();
            w.push_back(s);
            h += s == 'U' ? 1 : s == 'D' ? -1 : 0;
            if (h < 0) ok = false;
        }
        if (ok && h == 0) out.insert(w);
    }
    return out;
}

// Hump count straight from the definition: for each Down, look back over
// flats for an Up.
std::uint64_t humps_by_definition(const std::string& w) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 'D') continue;
        std::size_t j = i;
        while (j > 0 && w[j - 1] == 'F') --j;
        if (j > 0 && w[j - 1] == 'U') ++count;
    }
    return count;
}

} // namespace

TEST_CASE("path validation and text form") {
    CHECK(format_path(parse_path(PathKind::Motzkin, "UFD")) == "UFD");
    CHECK(parse_path(PathKind::Dyck, "").length() == 0);
    CHECK_THROWS_AS(parse_path(PathKind::Dyck, "UFD"), Error);
    CHECK_THROWS_AS(parse_path(PathKind::Motzkin, "DU"), Error);
    CHECK_THROWS_AS(parse_path(PathKind::Motzkin, "UU"), Error);
    CHECK_THROWS_AS(parse_path(PathKind::Motzkin, "UX"), Error);
}

TEST_CASE("Dyck enumeration") {
    CHECK(texts(enumerate_dyck(0)) == std::vector<std::string>{""});
    CHECK(texts(enumerate_dyck(2)) == std::vector<std::string>{"UUDD", "UDUD"});
    CHECK(enumerate_dyck(3).size() == 5);
    CHECK_THROWS_AS(enumerate_dyck(15), Error);
    for (std::uint64_t n = 0; n <= 12; ++n) CHECK(BigNatural(static_cast<unsigned long>(enumerate_dyck(n).size())) == catalan(n));
    for (std::uint64_t n = 0; n <= 7; ++n) {
        const auto listed = texts(enumerate_dyck(n));
        CHECK(std::set<std::string>(listed.begin(), listed.end()) == brute_paths(PathKind::Dyck, 2 * n));
    }
}

TEST_CASE("Motzkin enumeration") {
    CHECK(texts(enumerate_motzkin(0)) == std::vector<std::string>{""});
    CHECK(texts(enumerate_motzkin(2)) == std::vector<std::string>{"UD", "FF"});
    CHECK(texts(enumerate_motzkin(3)) == std::vector<std::string>{"UFD", "UDF", "FUD", "FFF"});
    CHECK_THROWS_AS(enumerate_motzkin(17), Error);
    CHECK(count_paths(PathKind::Motzkin, 17, 17) == 2356779);
    const auto m = motzkin_number_table(14);
    for (std::uint64_t n = 0; n <= 14; ++n) CHECK(BigNatural(static_cast<unsigned long>(enumerate_motzkin(n).size())) == m[n]);
    for (std::uint64_t n = 0; n <= 9; ++n) {
        const auto listed = texts(enumerate_motzkin(n));
        CHECK(std::set<std::string>(listed.begin(), listed.end()) == brute_paths(PathKind::Motzkin, n));
    }
}

TEST_CASE("count_humps") {
    CHECK(count_humps(parse_path(PathKind::Dyck, "UUDD")) == 1);
    CHECK(count_humps(parse_path(PathKind::Dyck, "UDUD")) == 2);
    CHECK(count_humps(parse_path(PathKind::Motzkin, "UFD")) == 1);
    CHECK(count_humps(parse_path(PathKind::Motzkin, "FFF")) == 0);
    CHECK(count_humps(parse_path(PathKind::Motzkin, "UFUFDD")) == 1);
    CHECK(count_humps(parse_path(PathKind::Motzkin, "UFDUD")) == 2);
    for (std::uint64_t n = 0; n <= 10; ++n) {
        for (const auto& p : enumerate_motzkin(n)) CHECK(count_humps(p) == humps_by_definition(format_path(p)));
    }
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (const auto& p : enumerate_dyck(n)) {
            const auto h = count_humps(p);
            CHECK(h >= 1);
            CHECK(h <= n);
            CHECK(h == humps_by_definition(format_path(p)));
        }
    }
}

TEST_CASE("hump totals") {
    CHECK(total_humps(PathKind::Dyck, 2, HumpMethod::Enumerate) == 3);
    CHECK(total_humps(PathKind::Dyck, 2, HumpMethod::Closed) == 3);
    CHECK(total_humps(PathKind::Dyck, 0, HumpMethod::Closed) == 0);
    CHECK(total_humps(PathKind::Dyck, 0, HumpMethod::Enumerate) == 0);
    CHECK(total_humps(PathKind::Motzkin, 3, HumpMethod::Enumerate) == 3);
    CHECK(total_humps(PathKind::Motzkin, 3, HumpMethod::Closed) == 3);
    CHECK(total_humps(PathKind::Motzkin, 4, HumpMethod::Closed) == 9);
    CHECK_THROWS_AS(total_humps(PathKind::Dyck, 15, HumpMethod::Enumerate), Error);
    CHECK(total_humps(PathKind::Dyck, 40, HumpMethod::Closed) == binomial(79, 40));

    for (std::uint64_t n = 0; n <= 12; ++n) {
        const BigNatural e = total_humps(PathKind::Dyck, n, HumpMethod::Enumerate);
        CHECK(e == total_humps(PathKind::Dyck, n, HumpMethod::Closed));
        CHECK(e == reference::total_humps_enumerate(PathKind::Dyck, n));
        CHECK(count_paths(PathKind::Dyck, n) == catalan(n));
    }
    for (std::uint64_t n = 0; n <= 14; ++n) {
        const BigNatural e = total_humps(PathKind::Motzkin, n, HumpMethod::Enumerate);
        CHECK(e == total_humps(PathKind::Motzkin, n, HumpMethod::Closed));
        CHECK(e == reference::total_humps_enumerate(PathKind::Motzkin, n));
    }
}

TEST_CASE("correspondences") {
    for (std::uint64_t n = 0; n <= 14; ++n) {
        const auto r = verify_correspondences(n);
        CHECK_MESSAGE(r.status == VerificationStatus::Pass, "n=", n);
    }
    CHECK(total_humps(PathKind::Motzkin, 3, HumpMethod::Enumerate) + 1 == hook_sum_direct({2, 1}, 3));
    CHECK(total_humps(PathKind::Motzkin, 1, HumpMethod::Enumerate) == 0);
    // Caps propagate.
    CHECK_THROWS_AS(verify_correspondences(14, PathCaps{13, 16}), Error);
}
