#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "logicfuse/enumerate.hpp"
#include "logicfuse/instances.hpp"
#include "logicfuse/parse.hpp"
#include "logicfuse/search.hpp"

using namespace logicfuse;

namespace {

Formula pf(const std::string& text, const Signature& sig) {
    auto r = parse_formula(text, sig);
    REQUIRE_MESSAGE(r.ok(), text, ": ", (r.ok() ? "" : r.error().to_string()));
    return std::move(r).value();
}

SearchConfig depth(int d) {
    SearchConfig cfg;
    cfg.max_depth = d;
    return cfg;
}

}  // namespace

TEST_CASE("the four paper theorems are proved and their proofs check") {
    struct Case {
        const char* logic;
        const char* text;
    } cases[] = {
        {"PLJ", "(imp.pl (neg (neg p1)) p1)"},
        {"PLJ", "(imp.it (imp.it p1 p2) (imp.pl p1 p2))"},
        {"JS", "(imp.it (neg.it p1.it) (neg.s4 p1.it))"},
        {"CJ", "(disj.j3 p1 (neg.pl p1))"},
    };
    for (const auto& c : cases) {
        const auto& b = builtin(c.logic);
        SearchOutcome o = prove_theorem(*b.calculus, pf(c.text, b.sig), depth(30));
        REQUIRE_MESSAGE(o.verdict == Verdict::Proved, c.logic, " ", c.text);
        REQUIRE(o.derivation);
        CHECK(!check_derivation(*b.calculus, *o.derivation));
        CHECK(o.derivation->lines.front().sequent.render() ==
              std::string("=> ") + c.text);
    }
}

TEST_CASE("the collapse formula stays unprovable (loop-checked, not cut off)") {
    const auto& plj = builtin("PLJ");
    Formula collapse = pf("(imp.it (neg (neg p1)) p1)", plj.sig);
    SearchOutcome combined = prove_theorem(*plj.calculus, collapse, depth(30));
    CHECK(combined.verdict == Verdict::NotProvable);

    const auto& it = builtin("It");
    const auto& comb = builtin_combination("PLJ").comb;
    SearchOutcome host = prove_theorem(*it.calculus, flatten(comb, collapse), depth(30));
    CHECK(host.verdict == Verdict::NotProvable);
}

TEST_CASE("loop check is needed for terms that repeat their principal") {
    const auto& it = builtin("It");
    // (p1 -> p1) -> p1 is not provable; the L_imp.it premise repeats the
    // principal formula, so only the loop check closes the branch.
    Formula f = pf("(imp.it (imp.it p1 p1) p1)", it.sig);
    SearchOutcome with_check = prove_theorem(*it.calculus, f, depth(14));
    CHECK(with_check.verdict == Verdict::NotProvable);
    SearchConfig no_check = depth(14);
    no_check.loop_check = false;
    SearchOutcome without = prove_theorem(*it.calculus, f, no_check);
    CHECK(without.verdict == Verdict::DepthExhausted);
}

TEST_CASE("monotonicity in the depth bound") {
    const auto& cj = builtin("CJ");
    Formula f = pf("(disj.j3 p1 (neg.pl p1))", cj.sig);
    int min_depth = -1;
    for (int d = 1; d <= 12; ++d) {
        if (prove_theorem(*cj.calculus, f, depth(d)).verdict == Verdict::Proved) {
            min_depth = d;
            break;
        }
    }
    REQUIRE(min_depth > 0);
    for (int d = min_depth; d <= min_depth + 6; ++d)
        CHECK(prove_theorem(*cj.calculus, f, depth(d)).verdict == Verdict::Proved);
}

TEST_CASE("verdicts are independent of the rule application order") {
    const auto& cj = builtin("CJ");
    std::vector<std::string> names;
    for (const auto& r : cj.calculus->schemas()) names.push_back(r.name);
    FormulaSpace space(cj.sig, {1, 2}, 2);
    auto indices = sample_indices(space, 40, 7);

    std::mt19937_64 rng(99);
    for (int round = 0; round < 3; ++round) {
        std::vector<std::string> shuffled = names;
        for (size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng() % i]);
        SearchConfig cfg = depth(20);
        SearchConfig shuffled_cfg = depth(20);
        shuffled_cfg.rule_order = shuffled;
        for (uint64_t idx : indices) {
            Formula f = space.at(idx);
            Verdict a = prove_theorem(*cj.calculus, f, cfg).verdict;
            Verdict b = prove_theorem(*cj.calculus, f, shuffled_cfg).verdict;
            if (a != Verdict::DepthExhausted && b != Verdict::DepthExhausted)
                CHECK_MESSAGE(a == b, "order dependence at ", render(f));
        }
    }
}

TEST_CASE("every proved derivation checks (sampled corpus)") {
    for (const char* logic : {"It", "PLJ", "CJ", "JS"}) {
        const auto& b = builtin(logic);
        FormulaSpace space(b.sig, {1, 2}, 2);
        auto indices = sample_indices(space, 60, 11);
        for (uint64_t idx : indices) {
            SearchOutcome o = prove_theorem(*b.calculus, space.at(idx), depth(20));
            if (o.verdict == Verdict::Proved) {
                REQUIRE(o.derivation);
                auto diag = check_derivation(*b.calculus, *o.derivation);
                CHECK_MESSAGE(!diag, logic, " at ", render(space.at(idx)),
                              diag ? diag->reason : "");
            }
        }
    }
}

TEST_CASE("proving a sequent goal directly") {
    const auto& it = builtin("It");
    auto goal = parse_sequent("p1, (imp.it p1 p2) => p2", it.sig);
    REQUIRE(goal.ok());
    SearchOutcome o = prove(*it.calculus, goal.value(), depth(10));
    CHECK(o.verdict == Verdict::Proved);
}

TEST_CASE("theoremhood transfer agrees on both sides") {
    const auto& cb = builtin_combination("PLJ");
    const auto& host = *cb.host->calculus;
    for (const char* text : {"(imp.pl (neg (neg p1)) p1)",        // theorem on both sides
                             "(imp.it (neg (neg p1)) p1)",        // non-theorem on both
                             "(imp.it (imp.it p1 p2) (imp.pl p1 p2))"}) {
        TransferReport rep = theoremhood_transfer(cb.generated, host,
                                                  cb.comb, pf(text, cb.comb.combined), depth(30));
        CHECK_MESSAGE(rep.agree, text, ": ", rep.detail);
    }
}

TEST_CASE("search trace reports expansions") {
    const auto& it = builtin("It");
    std::ostringstream trace;
    SearchConfig cfg = depth(10);
    cfg.trace = &trace;
    prove_theorem(*it.calculus, pf("(imp.it p1 p1)", it.sig), cfg);
    CHECK(trace.str().find("R_imp.it") != std::string::npos);
    CHECK(trace.str().find("goal") != std::string::npos);
}
