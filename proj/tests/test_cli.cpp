#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "logicfuse/cli.hpp"

using namespace logicfuse;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = std::string(std::tmpnam(nullptr)) + ".der";
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("prove prints a checkable derivation and exits 0") {
    auto r = run({"prove", "--logic", "PLJ", "(imp.pl (neg (neg p1)) p1)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1. => (imp.pl (neg (neg p1)) p1) ; R_imp.pl 2") == 0);

    // the printed derivation is accepted by check (round trip)
    TempFile file(r.out);
    auto check = run({"check", "--logic", "PLJ", file.path});
    CHECK(check.code == 0);
    CHECK(check.out.find("ok") == 0);
}

TEST_CASE("prove distinguishes negative verdicts from errors") {
    CHECK(run({"prove", "--logic", "PLJ", "(imp.it (neg (neg p1)) p1)"}).code == 1);
    CHECK(run({"prove", "--logic", "PLJ", "(imp.zz p1 p1)"}).code == 2);
    CHECK(run({"prove", "--logic", "NOPE", "p1"}).code == 2);
    CHECK(run({"prove", "--logic", "PL", "p1"}).code == 2);  // no calculus
}

TEST_CASE("prove accepts sequents and depth flags") {
    auto r = run({"prove", "--logic", "It", "--max-depth", "12",
                  "p1, (imp.it p1 p2) => p2"});
    CHECK(r.code == 0);
    auto exhausted =
        run({"prove", "--logic", "It", "--max-depth", "1", "--no-loop-check",
             "(imp.it (imp.it p1 p1) p1)"});
    CHECK(exhausted.code == 1);
    CHECK(exhausted.out.find("depth_exhausted") != std::string::npos);
}

TEST_CASE("translate matches the documented images") {
    auto r = run({"translate", "--from", "PL", "--to", "It", "(imp.pl p1 p1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(neg (conj (neg (neg p1)) (neg (neg (neg p1)))))\n");

    auto gg = run({"translate", "--from", "PL", "--to", "It", "--translation",
                   "godel-gentzen", "(imp.pl p1 p1)"});
    CHECK(gg.code == 0);
    CHECK(gg.out == "(imp (neg (neg p1)) (neg (neg p1)))\n");
}

TEST_CASE("flatten maps combined formulas into the host") {
    auto r = run({"flatten", "--logic", "CJ", "(neg.pl p1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(sim.j3 (imp.j3 (sim.j3 p1) p1))\n");
    CHECK(run({"flatten", "--logic", "It", "p1"}).code == 2);
}

TEST_CASE("validate reports valid/invalid with matching exit codes") {
    auto valid = run({"validate", "--logic", "J3", "--flatten", "CJ",
                      "(disj.j3 p1 (neg.pl p1))"});
    CHECK(valid.code == 0);
    CHECK(valid.out == "valid\n");
    auto invalid = run({"validate", "--logic", "J3", "(imp.j3 p1 p2)"});
    CHECK(invalid.code == 1);
    CHECK(invalid.out == "invalid\n");
    CHECK(run({"validate", "--logic", "It", "p1"}).code == 2);  // no tables
}

TEST_CASE("check rejects a corrupted derivation with a diagnostic") {
    auto proved = run({"prove", "--logic", "CJ", "(disj.j3 p1 (neg.pl p1))"});
    REQUIRE(proved.code == 0);
    std::string broken = proved.out;
    broken.replace(broken.find("R_disj.j3"), 9, "R_conj.j3");
    TempFile file(broken);
    auto r = run({"check", "--logic", "CJ", file.path});
    CHECK(r.code == 1);
    CHECK(r.out.find("line 1") != std::string::npos);
}

TEST_CASE("combine prints the generated calculus and crosschecks it") {
    auto r = run({"combine", "--logic", "CJ"});
    CHECK(r.code == 0);
    CHECK(r.out.find("logic CJ") == 0);
    CHECK(r.out.find("rule L_neg.pl") != std::string::npos);
    CHECK(r.out.find("crosscheck against the transcription: ok") != std::string::npos);
}

TEST_CASE("audit subcommands") {
    CHECK(run({"audit", "--kind", "crosscheck"}).code == 0);
    CHECK(run({"audit", "--kind", "conservativity", "--depth", "2"}).code == 0);
    CHECK(run({"audit", "--kind", "self-containment", "--logic", "It"}).code == 0);
    CHECK(run({"audit", "--kind", "self-containment", "--logic", "PLJ"}).code == 1);
    auto corr = run({"audit", "--kind", "correspondence", "--logic", "CJ", "--samples", "25",
                     "--depth", "2"});
    CHECK(corr.code == 0);
    CHECK(run({"audit", "--kind", "nope"}).code == 2);
}

TEST_CASE("json output is well-formed") {
    auto r = run({"prove", "--logic", "CJ", "--format", "json",
                  "(disj.j3 p1 (neg.pl p1))"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "proved");
    CHECK(j["goal"]["right"][0] == "(disj.j3 p1 (neg.pl p1))");
    CHECK(j["derivation"].is_array());
    CHECK(j["derivation"][0]["rule"] == "R_disj.j3");

    auto v = run({"validate", "--logic", "J3", "--json", "(disj.j3 p1 (sim.j3 p1))"});
    auto jv = nlohmann::json::parse(v.out);
    CHECK(jv["valid"] == true);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"prove"}).code == 2);
    CHECK(run({"zap", "--logic", "PLJ"}).code == 2);
}
