#include <doctest.h>

#include "logicfuse/formula.hpp"
#include "logicfuse/parse.hpp"

using namespace logicfuse;

namespace {

Signature plj_like() {
    return Signature("PLJ", "it",
                     {{"bot", "", 0},
                      {"neg", "", 1},
                      {"conj", "", 2},
                      {"disj", "it", 2},
                      {"imp", "it", 2},
                      {"disj", "pl", 2},
                      {"imp", "pl", 2}},
                     {"pl"});
}

Formula parse_ok(const std::string& text, const Signature& sig) {
    auto r = parse_formula(text, sig);
    REQUIRE_MESSAGE(r.ok(), text, ": ", (r.ok() ? "" : r.error().to_string()));
    return std::move(r).value();
}

}  // namespace

TEST_CASE("prop bases") {
    CHECK(prop_base_index("p1") == 1u);
    CHECK(prop_base_index("p42") == 42u);
    CHECK(!prop_base_index("p01"));
    CHECK(!prop_base_index("p"));
    CHECK(!prop_base_index("q1"));
    CHECK(!prop_base_index("p1x"));
}

TEST_CASE("render is canonical prefix form") {
    Signature sig = plj_like();
    CHECK(render(Formula::app(*sig.find("bot"))) == "bot");
    Formula p1 = Formula::prop(1);
    CHECK(render(p1) == "p1");
    Formula f = Formula::app(*sig.find("imp.pl"),
                             {Formula::app(*sig.find("neg"), {Formula::app(*sig.find("neg"), {p1})}),
                              p1});
    CHECK(render(f) == "(imp.pl (neg (neg p1)) p1)");
    CHECK(render(Formula::source_prop(3, "pl")) == "p3.pl");
}

TEST_CASE("parse canonical and sugared forms") {
    Signature sig = plj_like();
    CHECK(render(parse_ok("(neg.it p1)", Signature("It", "it", {{"neg", "it", 1}}))) ==
          "(neg.it p1)");
    CHECK(render(parse_ok("p1 ->pl p2", sig)) == "(imp.pl p1 p2)");
    CHECK(render(parse_ok("(imp.pl (neg (neg p1)) p1)", sig)) == "(imp.pl (neg (neg p1)) p1)");
    CHECK(render(parse_ok("neg p1 & p2", sig)) == "(conj (neg p1) p2)");
}

TEST_CASE("implication is right associative and lowest precedence") {
    Signature sig = plj_like();
    CHECK(render(parse_ok("p1 ->it p2 ->it p3", sig)) == "(imp.it p1 (imp.it p2 p3))");
    CHECK(render(parse_ok("neg p1 |it p2 ->it p1 & p2", sig)) ==
          "(imp.it (disj.it (neg p1) p2) (conj p1 p2))");
    CHECK(render(parse_ok("neg (p1 & p2)", sig)) == "(neg (conj p1 p2))");
}

TEST_CASE("source-prop constants and ambiguity errors") {
    Signature sig = plj_like();
    CHECK(render(parse_ok("p2.pl", sig)) == "p2.pl");
    CHECK(!parse_formula("p1 | p2", sig).ok());     // disj.it vs disj.pl
    CHECK(!parse_formula("p1 |j3 p2", sig).ok());   // unknown tag
    CHECK(!parse_formula("p2.s4", sig).ok());       // no such family
    CHECK(!parse_formula("(neg p1", sig).ok());
    CHECK(!parse_formula("(conj p1)", sig).ok());   // arity
    auto err = parse_formula("(zap p1)", sig);
    REQUIRE(!err.ok());
    CHECK(err.error().message.find("unknown constructor") != std::string::npos);
}

TEST_CASE("parse then render round-trips on rendered forms") {
    Signature sig = plj_like();
    for (const char* text :
         {"(imp.pl (neg (neg p1)) p1)", "(disj.pl p1 (neg p2))", "(conj bot p1.pl)",
          "(imp.it (imp.it p1 p2) (imp.pl p1 p2))"}) {
        Formula f = parse_ok(text, sig);
        CHECK(render(parse_ok(render(f), sig)) == render(f));
        CHECK(parse_ok(render(f), sig) == f);
    }
}

TEST_CASE("structural equality tracks rendering") {
    Signature sig = plj_like();
    Formula a = parse_ok("(conj p1 p2)", sig);
    Formula b = parse_ok("p1 & p2", sig);
    Formula c = parse_ok("p2 & p1", sig);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(render(a) == render(b));
    CHECK(render(a) != render(c));
    CHECK(a.hash() == b.hash());
}

TEST_CASE("depth counts constructor nesting") {
    Signature sig = plj_like();
    CHECK(parse_ok("p1", sig).depth() == 0);
    CHECK(parse_ok("bot", sig).depth() == 0);
    CHECK(parse_ok("p1.pl", sig).depth() == 0);
    CHECK(parse_ok("(neg p1)", sig).depth() == 1);
    CHECK(parse_ok("(imp.pl (neg (neg p1)) p1)", sig).depth() == 3);
}

TEST_CASE("well_formed rejects foreign constructors") {
    Signature sig = plj_like();
    Signature other("X", "x", {{"zap", "x", 1}});
    Formula foreign = Formula::app(*other.find("zap.x"), {Formula::prop(1)});
    CHECK(!well_formed(foreign, sig));
    CHECK(well_formed(parse_ok("(neg p1)", sig), sig));
    CHECK(well_formed(parse_ok("p9.pl", sig), sig));
}

TEST_CASE("prop indices are collected sorted without source props") {
    Signature sig = plj_like();
    Formula f = parse_ok("(conj (imp.it p3 p1) p2.pl)", sig);
    CHECK(prop_indices(f) == std::vector<uint32_t>{1, 3});
}
