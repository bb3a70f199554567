#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "lgb/cli.hpp"

using namespace lgb;

namespace {
struct RunResult {
    int code;
    std::string out;
    std::string err;
};
RunResult run(std::initializer_list<const char*> args) {
    std::ostringstream out, err;
    int code = cli_run(std::vector<std::string>(args.begin(), args.end()), out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("bound command") {
    RunResult r = run({"bound", "--n", "4", "--class", "irreducible"});
    CHECK(r.code == 0);
    CHECK(r.out == "51840 (r=4, m=1), alpha=0.78\n");

    r = run({"bound", "--n", "64", "--class", "general"});
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha=0.00") != std::string::npos);
    CHECK(r.out.find("(n+2)!") != std::string::npos);

    r = run({"bound", "--n", "4", "--char", "2", "--sylow-exp", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("94371840") != std::string::npos);
}

TEST_CASE("bound JSON round-trips byte-identically") {
    RunResult r = run({"bound", "--n", "24", "--emit", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
    CHECK(parsed["n"] == 24);
}

TEST_CASE("catalog queries") {
    RunResult r = run({"catalog", "--group", "M11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order 7920") != std::string::npos);
    CHECK(r.out.find("min n 4") != std::string::npos);

    r = run({"catalog", "--lie", "E8:8:2"});
    CHECK(r.out.find("d=248") != std::string::npos);

    r = run({"catalog", "--degree", "2"});
    CHECK(r.out == "2.Alt5\n");

    r = run({"catalog", "--dump", "T12.2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("900000000000") != std::string::npos);
}

TEST_CASE("table regeneration exit codes") {
    RunResult r = run({"table", "--id", "T12.2", "--diff"});
    CHECK(r.code == 0);
    // T12.1 carries the single alpha_all(23) print mismatch
    r = run({"table", "--id", "T12.1", "--diff"});
    CHECK(r.code == 1);
    // without --diff the table just emits
    r = run({"table", "--id", "T12.1", "--emit", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2,0.34,0.34") != std::string::npos);
    r = run({"table", "--id", "T12.2", "--emit", "md"});
    CHECK(r.out.find("| 2 | 60 | 30 |") != std::string::npos);
}

TEST_CASE("verify command exit codes") {
    RunResult r = run({"verify", "--lemma", "A9", "--range", "n=13..20,m=13..20,t=1..4"});
    CHECK(r.code == 0);
    r = run({"verify", "--lemma", "A6d"});
    CHECK(r.code == 1);  // the Suz slip instance
    r = run({"verify", "--lemma", "A1a", "--range", "x=2..6,y=2..6", "--emit", "junit"});
    CHECK(r.code == 0);
    CHECK(r.out.find("<testsuite") != std::string::npos);
}

TEST_CASE("mindeg and constants") {
    RunResult r = run({"mindeg", "--group", "A1(8)", "--char", "3"});
    CHECK(r.out == "7\n");
    r = run({"constants"});
    CHECK(r.code == 0);
    CHECK(r.out.find("f(248)") != std::string::npos);
}

TEST_CASE("usage errors exit 3") {
    CHECK(run({"bound"}).code == 3);
    CHECK(run({"nonsense"}).code == 3);
    CHECK(run({"catalog"}).code == 3);
    CHECK(run({"mindeg", "--group", "nosuch", "--char", "3"}).code == 3);
}
