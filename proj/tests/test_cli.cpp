#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "hooksum/cli.hpp"
#include "hooksum/error.hpp"

using namespace hooksum;
using hooksum::cli::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> cap = std::nullopt) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, cap);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("value commands") {
    CHECK(run({"hooksum", "--k", "2", "--l", "1", "--n", "4"}).out == "10\n");
    CHECK(run({"hooksum", "--k", "2", "--l", "1", "--n", "4", "--method", "closed"}).out == "10\n");
    CHECK(run({"seq", "a", "--from", "1", "--to", "4"}).out == "0,1,1,3\n");
    CHECK(run({"seq", "a", "--from", "1", "--to", "4", "--method", "explicit"}).out == "0,1,1,3\n");
    CHECK(run({"seq", "motzkin", "--from", "0", "--to", "5"}).out == "1,1,2,4,9,21\n");
    CHECK(run({"seq", "catalan", "--from", "0", "--to", "5"}).out == "1,1,2,5,14,42\n");
    CHECK(run({"syt", "count", "--shape", "3,2"}).out == "5\n");
    CHECK(run({"syt", "oracle", "--shape", "2^2,1"}).out == "5\n");
    CHECK(run({"starsum", "--n", "7", "--method", "closed"}).out == "35\n");
    CHECK(run({"starsum", "--n", "7"}).out == "35\n");
    CHECK(run({"humps", "--kind", "motzkin", "--n", "4", "--method", "enumerate"}).out == "9\n");
    CHECK(run({"humps", "--kind", "dyck", "--n", "2"}).out == "3\n");
}

TEST_CASE("json records") {
    const auto r = run({"hooksum", "--k", "2", "--l", "1", "--n", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["value"] == "10");
    CHECK(j["method"] == "direct");
    CHECK(j["parameters"]["n"] == 4);
    CHECK(j["query"] == "hooksum --k 2 --l 1 --n 4 --method direct");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"query", "parameters", "value", "method"});

    // Values beyond 64 bits stay exact decimal strings.
    const Json c = Json::parse(run({"seq", "catalan", "--from", "200", "--to", "200", "--format", "json"}).out);
    REQUIRE(c.is_array());
    CHECK(c[0]["value"].is_string());
    CHECK(c[0]["value"].get<std::string>().size() == 117);
}

TEST_CASE("json round-trips byte for byte") {
    const std::vector<std::vector<std::string>> commands{
        {"hooksum", "--k", "3", "--l", "1", "--n", "12", "--format", "json"},
        {"seq", "a", "--from", "0", "--to", "30", "--format", "json"},
        {"table", "--k", "2", "--l", "1", "--from", "0", "--to", "12", "--format", "json"},
        {"character", "omega", "--n", "5", "--format", "json"},
        {"verify", "--identity", "b3", "--from", "2", "--to", "20", "--format", "json"},
        {"verify", "--identity", "all", "--format", "json"},
        {"syt", "oracle", "--shape", "4,2,1", "--format", "json"},
    };
    for (const auto& cmd : commands) {
        const auto r = run(cmd);
        REQUIRE_MESSAGE(r.code == 0, cmd.front(), r.err);
        CHECK(Json::parse(r.out).dump() + "\n" == r.out);
    }
}

TEST_CASE("csv and text tables") {
    const auto csv = run({"table", "--k", "2", "--l", "1", "--from", "1", "--to", "4", "--format", "csv"});
    CHECK(csv.out == "index,value,method\n1,1,direct\n2,2,direct\n3,4,direct\n4,10,direct\n");
    const auto closed = run({"table", "--k", "3", "--l", "1", "--from", "0", "--to", "3", "--method", "closed",
                             "--format", "csv"});
    CHECK(closed.out == "index,value,method\n0,1,closed\n1,1,closed\n2,2,closed\n3,4,closed\n");
    CHECK(run({"table", "--k", "2", "--l", "0", "--from", "0", "--to", "4", "--format", "text"}).out ==
          "1,1,2,3,6\n");
    CHECK(run({"table", "--k", "2", "--l", "0", "--from", "0", "--to", "4"}).code == cli::kExitUsage);
}

TEST_CASE("direct and closed agree through the CLI") {
    for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {2, 1}, {3, 1}}) {
        const std::vector<std::string> base{"table", "--k", std::to_string(k), "--l", std::to_string(l), "--from",
                                            "2", "--to", "20", "--format", "text"};
        auto direct = base;
        direct.insert(direct.end(), {"--method", "direct"});
        auto closed = base;
        closed.insert(closed.end(), {"--method", "closed"});
        CHECK(run(direct).out == run(closed).out);
    }
}

TEST_CASE("character output") {
    const auto r = run({"character", "omega", "--n", "3"});
    CHECK(r.out == "(3) 1\n(2,1) 1\n(1,1,1) 2\ndegree 5\n");
    const Json j = Json::parse(run({"character", "psi", "--n", "4", "--format", "json"}).out);
    CHECK(j["value"] == "3");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["partition"] == "2,2");
    CHECK(j["terms"][1]["partition"] == "1,1,1,1");
    CHECK(run({"character", "check-p3", "--n", "8"}).code == 0);
}

TEST_CASE("verification commands") {
    CHECK(run({"verify", "--identity", "b3", "--from", "2", "--to", "100"}).code == 0);
    const Json j = Json::parse(run({"verify", "--identity", "b4", "--from", "3", "--to", "3", "--format", "json"}).out);
    CHECK(j["identity"] == "b4");
    CHECK(j["range"] == Json::array({3, 3}));
    CHECK(j["status"] == "pass");
    CHECK(j["first_failure"].is_null());
    CHECK(run({"verify", "--list"}).out.find("lemma42") != std::string::npos);
    CHECK(run({"verify", "--identity", "all", "--from", "2", "--to", "10"}).code == 0);
}

TEST_CASE("exit codes and diagnostics") {
    const auto missing = run({"hooksum", "--k", "2"});
    CHECK(missing.code == cli::kExitUsage);
    CHECK(missing.err.find("usage: hooksum hooksum") != std::string::npos);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"syt", "count", "--shape", "2,3"}).code == cli::kExitUsage);
    CHECK(run({"starsum", "--n", "3"}).code == cli::kExitUsage);
    CHECK(run({"hooksum", "--k", "2", "--l", "2", "--n", "5", "--method", "closed"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--identity", "nope"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--identity", "b3", "--from", "9", "--to", "3"}).code == cli::kExitUsage);
    CHECK(run({"seq", "a", "--from", "5", "--to", "1"}).code == cli::kExitUsage);
    CHECK(run({"humps", "--kind", "other", "--n", "2"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("enumeration cap from the environment") {
    CHECK(run({"syt", "oracle", "--shape", "17"}).code == cli::kExitUsage);
    CHECK(run({"syt", "oracle", "--shape", "17"}, "20").out == "1\n");
    CHECK(run({"humps", "--kind", "dyck", "--n", "4", "--method", "enumerate"}, "3").code == cli::kExitUsage);
    CHECK(run({"humps", "--kind", "dyck", "--n", "3", "--method", "enumerate"}, "3").out == "10\n");
    CHECK(run({"hooksum", "--k", "1", "--l", "1", "--n", "3"}, "abc").code == cli::kExitUsage);
    CHECK(cli::enum_cap_from_env(nullptr) == std::nullopt);
    CHECK(cli::enum_cap_from_env("12") == 12u);
    CHECK_THROWS_AS(cli::enum_cap_from_env("-4"), Error);
}
