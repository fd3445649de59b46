#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "zonotopal/cli.hpp"
#include "zonotopal/serialize.hpp"

using namespace zonotopal;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; stderr is discarded.
std::pair<int, std::string> shell(const std::string& env, const std::string& args) {
    const char* bin = std::getenv("ZONOTOPAL_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = env + " '" + std::string(bin) + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 256> buf;
    while (fgets(buf.data(), buf.size(), p)) out += buf.data();
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("basic commands") {
    CHECK(run({"arith-tutte", "--x", "[[1,0,1,1],[0,1,1,-1]]"}).out == "a^2 + b^2 + 2a + 2b + 1\n");
    CHECK(run({"tutte", "--x", "[[1,0,1,1],[0,1,1,-1]]"}).out == "a^2 + b^2 + 2a + 2b\n");
    CHECK(run({"count", "--x", "[[1,2,4]]", "--u", "[5]"}).out == "4\n");
    CHECK(run({"count", "--x", "[[1,2,4]]", "--u", "[0]"}).out == "1\n");
    CHECK(run({"bv-count", "--x", "[[1,2,4]]", "--z", "[1]", "--u", "[6]"}).out == "4\n");
    CHECK(run({"volume", "--x", "[[1,2,4]]"}).code == 1);
    CHECK(run({"volume", "--x", "[[1,2,4]]", "--u", "[3]"}).code == 0);
    Run v = run({"vertices", "--x", "[[1]]", "--group", "Z/4"});
    CHECK(v.code == 0);
    CHECK(v.out.find("(;1/4)") != std::string::npos);
}

TEST_CASE("every command runs on a small list") {
    const std::vector<std::string> cmds = {"arith-tutte", "box",        "bv-count",    "cells",       "check-continuity",
                                           "check-deconv", "check-delta", "check-unity", "count",       "d-basis",
                                           "dm-basis",    "f-tilde",     "l-map",       "p-basis",     "pper-basis",
                                           "pper-internal", "quasipoly", "todd",        "tutte",       "vertices",
                                           "volume",      "wall-jump",   "zonotope"};
    for (const auto& c : cmds) {
        CAPTURE(c);
        Run r = run({c, "--x", "[[1,1]]", "--u", "[2]", "--z", "[1]", "--json"});
        CHECK(r.code == 0);
        Json j = Json::parse(r.out);
        CHECK(j["command"] == c);
        CHECK(j["list"]["matrix"] == Json::parse("[[1,1]]"));
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"nonsense", "--x", "[[1]]"}).code == 1);
    CHECK(run({"count"}).code == 1);
    CHECK(run({"count", "--x", "[[1,2]]", "--u", "[1,2]"}).code == 1);
    CHECK(run({"count", "--x", "[[1,2"}).code != 0);
    Run np = run({"count", "--x", "[[1,-1]]", "--u", "[0]"});
    CHECK(np.code == 2);
    CHECK(np.err.rfind("NotPointed:", 0) == 0);
    CHECK(run({"check-delta", "--x", "[[1,0,1,1],[0,1,1,-1]]", "--z", "[1,0]"}).code == 2);
    CHECK(run({"vertices", "--x", "[[1]]", "--group", "Z/1"}).code != 0);
}

TEST_CASE("the binary") {
    auto [code, out] = shell("", "count --x '[[1,2,4]]' --u '[5]'");
    CHECK(code == 0);
    CHECK(out == "4\n");
    CHECK(shell("ZONOTOPAL_THREADS=0", "count --x '[[1,2,4]]' --u '[5]'").first == 1);
    CHECK(shell("ZONOTOPAL_THREADS=abc", "count --x '[[1,2,4]]' --u '[5]'").first == 1);
    CHECK(shell("ZONOTOPAL_THREADS=2", "count --x '[[1,2,4]]' --u '[5]'") == std::make_pair(0, std::string("4\n")));
    CHECK(shell("", "count --x '[[1,-1]]' --u '[0]'").first == 2);
    CHECK(shell("", "").first == 1);
}

TEST_CASE("seeded runs are deterministic") {
    for (const char* seed : {"1", "3", "77"}) {
        Run a = run({"pper-basis", "--seed", seed, "--json"});
        Run b = run({"pper-basis", "--seed", seed, "--json"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    CHECK(run({"tutte", "--seed", "1"}).out == run({"tutte", "--seed", "1"}).out);
}

TEST_CASE("json round trips") {
    Run r = run({"pper-basis", "--x", "[[1,2,4]]", "--json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    const Json& basis = j["result"]["basis"];
    REQUIRE(basis.size() == 7);
    for (const Json& e : basis) {
        PeriodicPoly p = periodic_from_json(e, 1);
        CHECK(to_json(p) == e);
    }

    Run f = run({"f-tilde", "--x", "[[1,0,1,1],[0,1,1,-1]]", "--z", "[1,0]", "--json"});
    REQUIRE(f.code == 0);
    Json fj = Json::parse(f.out)["result"];
    CHECK(to_json(periodic_from_json(fj, 2)) == fj);

    Run dm = run({"dm-basis", "--x", "[[1,2,4]]", "--json"});
    REQUIRE(dm.code == 0);
    for (const Json& e : Json::parse(dm.out)["result"]) CHECK(to_json(quasi_from_json(e, 1)) == e);

    Run t = run({"arith-tutte", "--x", "[[1,0,1,1],[0,1,1,-1]]", "--json"});
    Json tj = Json::parse(t.out)["result"];
    CHECK(bivar_from_json(tj).str() == "a^2 + b^2 + 2a + 2b + 1");

    Cyclotomic z = Cyclotomic::root_of_unity(12, 5) * Cyclotomic(Rational(3, 7)) + Cyclotomic(Rational(-2));
    CHECK(cyclotomic_from_json(to_json(z)) == z);
    Rational half(1, 2);
    CHECK(rational_from_json(to_json(half)) == half);
    Character c{{Rational(1, 4)}, {Rational(1, 2)}};
    CHECK(character_from_json(to_json(c)) == c);
}
