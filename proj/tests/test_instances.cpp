#include <doctest.h>

#include "logicfuse/combine.hpp"
#include "logicfuse/instances.hpp"
#include "logicfuse/parse.hpp"

using namespace logicfuse;

TEST_CASE("bundle inventory") {
    auto names = builtin_names();
    for (const char* n : {"PL", "PLfrag", "It", "S4", "J3", "PLJ", "JS", "CJ"})
        CHECK_MESSAGE(find_builtin(n), n);
    CHECK(builtin_combination_names() == std::vector<std::string>{"CJ", "JS", "PLJ"});
    CHECK(!find_builtin("K4"));
    CHECK_THROWS_AS(builtin("K4"), std::invalid_argument);
}

TEST_CASE("signatures carry the expected constructors") {
    const auto& it = builtin("It");
    CHECK(it.sig.find("bot"));
    CHECK(it.sig.find("neg"));
    CHECK(it.sig.find("conj"));
    CHECK(it.sig.find("imp.it"));
    CHECK(it.sig.find("disj.it"));
    CHECK(!it.sig.find("imp.pl"));

    const auto& plfrag = builtin("PLfrag");
    CHECK(plfrag.sig.find("neg.pl"));
    CHECK(plfrag.sig.find("imp.pl"));
    CHECK(!plfrag.sig.find("bot"));

    const auto& plj = builtin("PLJ");
    CHECK(plj.sig.find("p1.pl"));
    CHECK(plj.sig.find("p7.pl"));
    CHECK(!plj.sig.find("p7.s4"));
}

TEST_CASE("host calculi and matrices sit on their bundle") {
    CHECK(builtin("It").calculus);
    CHECK(builtin("S4").calculus);
    CHECK(builtin("J3").calculus);
    CHECK(!builtin("PL").calculus);
    CHECK(builtin("PL").semantics);
    CHECK(builtin("PLfrag").semantics);
    CHECK(builtin("J3").semantics);
    CHECK(!builtin("It").semantics);
    CHECK(!builtin("S4").semantics);
    CHECK(builtin("It").calculus->mode() == SuccedentMode::Single);
    CHECK(builtin("S4").calculus->mode() == SuccedentMode::Multi);
    CHECK(builtin("J3").calculus->mode() == SuccedentMode::Multi);
}

TEST_CASE("crosscheck: generated combined calculi equal the transcriptions") {
    for (const auto& name : builtin_combination_names()) {
        const auto& cb = builtin_combination(name);
        CalculusDiff diff = crosscheck(cb);
        CHECK_MESSAGE(diff.ok(), name, ":\n", diff.render());
    }
}

TEST_CASE("prop-translation rules appear exactly when the families differ") {
    CHECK(builtin_combination("PLJ").generated.find("L_P.pl"));
    CHECK(builtin_combination("PLJ").generated.find("R_P.pl"));
    CHECK(builtin_combination("JS").generated.find("L_P.it"));
    CHECK(!builtin_combination("CJ").generated.find("L_P.pl"));
    bool any_prop_rule = false;
    for (const auto& r : builtin_combination("CJ").generated.schemas())
        any_prop_rule = any_prop_rule || r.kind == RuleKind::PropTransLeft ||
                        r.kind == RuleKind::PropTransRight;
    CHECK(!any_prop_rule);
}

TEST_CASE("a perturbed transcription diffs against the generated calculus") {
    const auto& cb = builtin_combination("PLJ");
    auto schemas = cb.transcription.schemas();
    // swap the L_disj.pl unfolding for the imp.pl one
    for (auto& r : schemas) {
        if (r.name == "L_disj.pl") {
            const RuleSchema* other = cb.transcription.find("L_imp.pl");
            REQUIRE(other);
            r.premises = other->premises;
        }
    }
    GentzenCalculus perturbed("PLJX", cb.transcription.signature(),
                              cb.transcription.mode(), schemas);
    CalculusDiff diff = diff_calculi(cb.generated, perturbed);
    CHECK(!diff.ok());
    CHECK(!diff.missing.empty());
    CHECK(!diff.extra.empty());
}

TEST_CASE("combine_calculus rejects a host over the wrong signature") {
    const auto& cb = builtin_combination("PLJ");
    CHECK_THROWS_AS(combine_calculus(*builtin("J3").calculus, cb.comb), std::invalid_argument);
}

TEST_CASE("every built-in host calculus is strictly self-contained") {
    for (const char* n : {"It", "S4", "J3"}) {
        auto rep = is_strictly_self_contained(*builtin(n).calculus);
        std::string detail;
        for (const auto& item : rep.per_rule)
            if (!item.ok) detail += item.rule + ": " + item.detail + "\n";
        CHECK_MESSAGE(rep.ok, n, ":\n", detail);
    }
}

TEST_CASE("translation lookup between logics") {
    CHECK(find_translation_between("PL", "It"));
    CHECK(find_translation_between("PL", "It")->name == "godel");
    CHECK(find_translation_between("PL", "It", "godel-gentzen")->name == "godel-gentzen");
    CHECK(find_translation_between("It", "S4")->name == "gmt");
    CHECK(find_translation_between("PL", "J3")->name == "pl-j3");
    CHECK(!find_translation_between("S4", "It"));
}
