#include <doctest.h>

#include "logicfuse/calculus_io.hpp"
#include "logicfuse/instances.hpp"

using namespace logicfuse;

TEST_CASE("embedded data files are present and well-formed") {
    for (const char* name : {"g_it.lgc", "g_s4.lgc", "g_j3.lgc", "g_plj.lgc", "g_js.lgc",
                             "g_cj.lgc"}) {
        auto parsed = parse_logic_file(embedded_data(name));
        REQUIRE_MESSAGE(parsed.ok(), name, ": ",
                        (parsed.ok() ? "" : parsed.error().to_string()));
        CHECK(parsed.value().calculus);
    }
    CHECK_THROWS_AS(embedded_data("nope.lgc"), std::invalid_argument);
}

TEST_CASE("calculus export/import round-trips structurally") {
    for (const char* name : {"It", "S4", "J3", "PLJ", "JS", "CJ"}) {
        const auto& b = builtin(name);
        REQUIRE(b.calculus);
        LogicFile lf;
        lf.name = b.name;
        lf.sig = b.sig;
        lf.calculus = b.calculus;
        std::string text = export_logic_file(lf);
        auto parsed = parse_logic_file(text);
        REQUIRE_MESSAGE(parsed.ok(), name, ": ",
                        (parsed.ok() ? "" : parsed.error().to_string()));
        REQUIRE(parsed.value().calculus);
        CalculusDiff diff = diff_calculi(*b.calculus, *parsed.value().calculus);
        CHECK_MESSAGE(diff.ok(), name, ":\n", diff.render());
        // rule names survive verbatim
        for (const auto& r : b.calculus->schemas())
            CHECK(parsed.value().calculus->find(r.name));
    }
}

TEST_CASE("matrix blocks round-trip") {
    const auto& j3 = builtin("J3");
    LogicFile lf;
    lf.name = "J3";
    lf.sig = j3.sig;
    lf.semantics = j3.semantics;
    std::string text = export_logic_file(lf);
    auto parsed = parse_logic_file(text);
    REQUIRE_MESSAGE(parsed.ok(), (parsed.ok() ? "" : parsed.error().to_string()));
    REQUIRE(parsed.value().semantics);
    const auto& sem = *parsed.value().semantics;
    CHECK(sem.matrix.values == j3.semantics->matrix.values);
    CHECK(sem.matrix.designated == j3.semantics->matrix.designated);
    CHECK(sem.tables == j3.semantics->tables);
}

TEST_CASE("translation blocks round-trip") {
    const auto& tb = builtin_translation("pl-j3");
    LogicFile lf;
    lf.name = "plj3";
    lf.sig = tb.comb.renamed.host;
    lf.translation = tb.comb.renamed;
    std::string text = export_logic_file(lf);
    auto parsed = parse_logic_file(text);
    REQUIRE_MESSAGE(parsed.ok(), (parsed.ok() ? "" : parsed.error().to_string()));
    REQUIRE(parsed.value().translation);
    const auto& t = *parsed.value().translation;
    CHECK(t.prop_template == tb.comb.renamed.prop_template);
    REQUIRE(t.ctor_map.size() == tb.comb.renamed.ctor_map.size());
    for (size_t i = 0; i < t.ctor_map.size(); ++i) {
        CHECK(t.ctor_map[i].first == tb.comb.renamed.ctor_map[i].first);
        CHECK(t.ctor_map[i].second == tb.comb.renamed.ctor_map[i].second);
    }
    CHECK(validate_translation(t).empty());
}

TEST_CASE("loader rejects malformed input") {
    CHECK(!parse_logic_file("calculus single\nend\n").ok());  // calculus before signature
    CHECK(!parse_logic_file("logic X\nsignature\n  ctor neg one\nend\n").ok());
    CHECK(!parse_logic_file("logic X\nsignature\n  ctor neg 1\n").ok());  // unterminated
    CHECK(!parse_logic_file("logic X\nsignature\n  zap neg 1\nend\n").ok());
    // bad rule pattern
    const char* bad_rule =
        "logic X\nsignature\n  props x\n  ctor neg 1\nend\ncalculus single\n"
        "  rule L_neg : $G => ?b1 / (zap ?b1), $G => ?b2\nend\n";
    CHECK(!parse_logic_file(bad_rule).ok());
    // table of the wrong width
    const char* bad_table =
        "logic X\nsignature\n  props x\n  ctor neg 1\nend\nmatrix\n  values 0 1\n"
        "  designated 1\n  table neg : 1 0 1\nend\n";
    CHECK(!parse_logic_file(bad_table).ok());
}
