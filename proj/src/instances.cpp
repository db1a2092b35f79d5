#include "logicfuse/instances.hpp"

#include <map>
#include <stdexcept>

#include "logicfuse/calculus_io.hpp"
#include "logicfuse/combine.hpp"

namespace logicfuse {

namespace {

Constructor ct(const char* base, const char* tag, int arity) {
    return Constructor{base, tag, arity};
}

MapTerm lift(const Signature& sig, const char* token) {
    auto c = sig.find(token);
    if (!c) throw std::logic_error(std::string("builtin lift of unknown ") + token);
    return MapTerm::lift(*c);
}

GentzenCalculus load_calculus(const char* file, const Signature& expected) {
    auto parsed = parse_logic_file(embedded_data(file));
    if (!parsed.ok())
        throw std::logic_error(std::string("embedded ") + file + ": " +
                               parsed.error().to_string());
    LogicFile lf = std::move(parsed).value();
    if (!lf.calculus) throw std::logic_error(std::string(file) + " carries no calculus");
    CalculusDiff sig_check;
    if (export_signature(lf.sig) != export_signature(expected))
        throw std::logic_error(std::string(file) + " signature differs from the built-in one");
    return *std::move(lf.calculus);
}

MatrixSemantics two_valued(const Signature& sig, std::map<std::string, std::vector<Value>> tables,
                           std::string name) {
    MatrixSemantics sem;
    sem.name = std::move(name);
    sem.sig = sig;
    sem.matrix.values = {"0", "1"};
    sem.matrix.designated = {1};
    sem.tables = std::move(tables);
    return sem;
}

struct Registry {
    std::map<std::string, TranslationBundle> translations;
    std::map<std::string, LogicBundle> logics;
    std::map<std::string, CombinationBundle> combinations;

    Registry() {
        // --- original (fully tagged) signatures --------------------------
        Signature pl_orig("PL", "pl",
                          {ct("bot", "pl", 0), ct("neg", "pl", 1), ct("conj", "pl", 2),
                           ct("disj", "pl", 2), ct("imp", "pl", 2)});
        Signature it_orig("It", "it",
                          {ct("bot", "it", 0), ct("neg", "it", 1), ct("conj", "it", 2),
                           ct("disj", "it", 2), ct("imp", "it", 2)});
        Signature s4_orig("S4", "s4",
                          {ct("bot", "s4", 0), ct("neg", "s4", 1), ct("box", "s4", 1),
                           ct("dia", "s4", 1), ct("conj", "s4", 2), ct("disj", "s4", 2),
                           ct("imp", "s4", 2)});
        Signature plfrag_orig("PL", "pl", {ct("neg", "pl", 1), ct("imp", "pl", 2)});
        Signature j3_orig("J3", "j3",
                          {ct("sim", "j3", 1), ct("conj", "j3", 2), ct("disj", "j3", 2),
                           ct("imp", "j3", 2)});

        // --- constructor translations ------------------------------------
        auto make_godel = [&](bool gentzen_imp) {
            ConstructorTranslation t;
            t.name = gentzen_imp ? "godel-gentzen" : "godel";
            t.source = pl_orig;
            t.host = it_orig;
            MapTerm neg = lift(it_orig, "neg.it");
            MapTerm conj = lift(it_orig, "conj.it");
            t.prop_template = MapTerm::comp(neg, MapTerm::comp(neg, MapTerm::hole()));
            t.ctor_map.emplace_back(ct("bot", "pl", 0), lift(it_orig, "bot.it"));
            t.ctor_map.emplace_back(ct("neg", "pl", 1), neg);
            t.ctor_map.emplace_back(ct("conj", "pl", 2), conj);
            t.ctor_map.emplace_back(
                ct("disj", "pl", 2),
                MapTerm::comp(neg, MapTerm::comp(conj, MapTerm::agg({
                    MapTerm::comp(neg, MapTerm::proj(2, 1)),
                    MapTerm::comp(neg, MapTerm::proj(2, 2))}))));
            t.ctor_map.emplace_back(
                ct("imp", "pl", 2),
                gentzen_imp ? lift(it_orig, "imp.it")
                            : MapTerm::comp(neg, MapTerm::comp(conj, MapTerm::agg({
                                  MapTerm::proj(2, 1),
                                  MapTerm::comp(neg, MapTerm::proj(2, 2))}))));
            return t;
        };

        ConstructorTranslation gmt;
        gmt.name = "gmt";
        gmt.source = it_orig;
        gmt.host = s4_orig;
        {
            MapTerm box = lift(s4_orig, "box.s4");
            gmt.prop_template = MapTerm::comp(box, MapTerm::hole());
            gmt.ctor_map.emplace_back(ct("bot", "it", 0), lift(s4_orig, "bot.s4"));
            gmt.ctor_map.emplace_back(ct("neg", "it", 1),
                                      MapTerm::comp(box, lift(s4_orig, "neg.s4")));
            gmt.ctor_map.emplace_back(ct("conj", "it", 2), lift(s4_orig, "conj.s4"));
            gmt.ctor_map.emplace_back(ct("disj", "it", 2), lift(s4_orig, "disj.s4"));
            gmt.ctor_map.emplace_back(ct("imp", "it", 2),
                                      MapTerm::comp(box, lift(s4_orig, "imp.s4")));
        }

        ConstructorTranslation plj3;
        plj3.name = "pl-j3";
        plj3.source = plfrag_orig;
        plj3.host = j3_orig;
        {
            MapTerm sim = lift(j3_orig, "sim.j3");
            MapTerm imp = lift(j3_orig, "imp.j3");
            plj3.prop_template = MapTerm::hole();
            plj3.ctor_map.emplace_back(
                ct("neg", "pl", 1),
                MapTerm::comp(sim, MapTerm::comp(imp, MapTerm::agg({sim, MapTerm::proj(1, 1)}))));
            plj3.ctor_map.emplace_back(
                ct("imp", "pl", 2),
                MapTerm::comp(imp, MapTerm::agg({
                    MapTerm::comp(imp, MapTerm::agg({MapTerm::comp(sim, MapTerm::proj(2, 1)),
                                                     MapTerm::proj(2, 1)})),
                    MapTerm::proj(2, 2)})));
        }

        auto identified = [](const ConstructorTranslation& t, const char* combined_name) {
            auto comb = identify_common(t, combined_name);
            if (!comb.ok()) throw std::logic_error("builtin identification failed for " + t.name);
            return std::move(comb).value();
        };

        translations["godel"] = {"godel", make_godel(false), identified(make_godel(false), "PLJ")};
        translations["godel-gentzen"] = {"godel-gentzen", make_godel(true),
                                         identified(make_godel(true), "PLJG")};
        translations["gmt"] = {"gmt", gmt, identified(gmt, "JS")};
        translations["pl-j3"] = {"pl-j3", plj3, identified(plj3, "CJ")};

        const Combination& plj_comb = translations.at("godel").comb;
        const Combination& js_comb = translations.at("gmt").comb;
        const Combination& cj_comb = translations.at("pl-j3").comb;

        // --- component logic bundles -------------------------------------
        {
            LogicBundle b;
            b.name = "It";
            b.doc = "intuitionistic propositional logic (single-succedent calculus)";
            b.sig = plj_comb.renamed.host;
            b.calculus = load_calculus("g_it.lgc", b.sig);
            logics["It"] = std::move(b);
        }
        {
            LogicBundle b;
            b.name = "PL";
            b.doc = "classical propositional logic (two-valued tables; no calculus)";
            b.sig = plj_comb.renamed.source;
            b.semantics = two_valued(b.sig,
                                     {{"bot", {0}},
                                      {"neg", {1, 0}},
                                      {"conj", {0, 0, 0, 1}},
                                      {"disj.pl", {0, 1, 1, 1}},
                                      {"imp.pl", {1, 1, 0, 1}}},
                                     "PL");
            logics["PL"] = std::move(b);
        }
        {
            LogicBundle b;
            b.name = "S4";
            b.doc = "S4 modal logic (multi-succedent calculus with modal context rules)";
            b.sig = js_comb.renamed.host;
            b.calculus = load_calculus("g_s4.lgc", b.sig);
            logics["S4"] = std::move(b);
        }
        {
            LogicBundle b;
            b.name = "PLfrag";
            b.doc = "classical fragment with negation and implication only";
            b.sig = cj_comb.renamed.source;
            b.semantics = two_valued(b.sig, {{"neg.pl", {1, 0}}, {"imp.pl", {1, 1, 0, 1}}},
                                     "PLfrag");
            logics["PLfrag"] = std::move(b);
        }
        {
            LogicBundle b;
            b.name = "J3";
            b.doc = "three-valued paraconsistent logic (designated 1/2 and 1)";
            b.sig = cj_comb.renamed.host;
            b.calculus = load_calculus("g_j3.lgc", b.sig);
            MatrixSemantics sem;
            sem.name = "J3";
            sem.sig = b.sig;
            sem.matrix.values = {"0", "1/2", "1"};
            sem.matrix.designated = {1, 2};
            sem.tables["sim.j3"] = {2, 1, 0};
            sem.tables["imp.j3"] = {2, 2, 2, 1, 2, 2, 0, 1, 2};
            sem.tables["conj.j3"] = {0, 0, 0, 0, 1, 1, 0, 1, 2};
            sem.tables["disj.j3"] = {0, 1, 2, 1, 1, 2, 2, 2, 2};
            b.semantics = std::move(sem);
            logics["J3"] = std::move(b);
        }

        // --- combined bundles ---------------------------------------------
        auto add_combination = [&](const char* name, const char* doc, const Combination& comb,
                                   const char* source, const char* host, const char* file) {
            CombinationBundle cb;
            cb.name = name;
            cb.doc = doc;
            cb.source = &logics.at(source);
            cb.host = &logics.at(host);
            cb.comb = comb;
            cb.generated = combine_calculus(*logics.at(host).calculus, comb);
            cb.transcription = load_calculus(file, comb.combined);
            LogicBundle lb;
            lb.name = name;
            lb.doc = doc;
            lb.sig = comb.combined;
            lb.calculus = cb.generated;
            logics[name] = std::move(lb);
            combinations[name] = std::move(cb);
        };
        add_combination("PLJ", "classical constructors living inside intuitionistic logic",
                        plj_comb, "PL", "It", "g_plj.lgc");
        add_combination("JS", "intuitionistic constructors living inside S4", js_comb, "It", "S4",
                        "g_js.lgc");
        add_combination("CJ", "classical negation and implication living inside J3", cj_comb,
                        "PLfrag", "J3", "g_cj.lgc");
    }
};

const Registry& registry() {
    static const Registry r;
    return r;
}

}  // namespace

const LogicBundle* find_builtin(std::string_view name) {
    const auto& m = registry().logics;
    auto it = m.find(std::string(name));
    return it == m.end() ? nullptr : &it->second;
}

const LogicBundle& builtin(std::string_view name) {
    const LogicBundle* b = find_builtin(name);
    if (!b) throw std::invalid_argument("unknown logic: " + std::string(name));
    return *b;
}

const CombinationBundle* find_builtin_combination(std::string_view name) {
    const auto& m = registry().combinations;
    auto it = m.find(std::string(name));
    return it == m.end() ? nullptr : &it->second;
}

const CombinationBundle& builtin_combination(std::string_view name) {
    const CombinationBundle* b = find_builtin_combination(name);
    if (!b) throw std::invalid_argument("unknown combined logic: " + std::string(name));
    return *b;
}

const TranslationBundle* find_builtin_translation(std::string_view name) {
    const auto& m = registry().translations;
    auto it = m.find(std::string(name));
    return it == m.end() ? nullptr : &it->second;
}

const TranslationBundle& builtin_translation(std::string_view name) {
    const TranslationBundle* b = find_builtin_translation(name);
    if (!b) throw std::invalid_argument("unknown translation: " + std::string(name));
    return *b;
}

const TranslationBundle* find_translation_between(std::string_view from, std::string_view to,
                                                  std::string_view name) {
    if (!name.empty()) {
        const TranslationBundle* b = find_builtin_translation(name);
        return b;
    }
    struct Pair {
        std::string_view from, to, name;
    };
    static constexpr Pair kPairs[] = {
        {"PL", "It", "godel"}, {"It", "S4", "gmt"}, {"PL", "J3", "pl-j3"},
        {"PLfrag", "J3", "pl-j3"}};
    for (const auto& p : kPairs)
        if (p.from == from && p.to == to) return find_builtin_translation(p.name);
    return nullptr;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry().logics) out.push_back(k);
    return out;
}

std::vector<std::string> builtin_combination_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry().combinations) out.push_back(k);
    return out;
}

std::vector<std::string> builtin_translation_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry().translations) out.push_back(k);
    return out;
}

CalculusDiff crosscheck(const CombinationBundle& cb) {
    return diff_calculi(cb.generated, cb.transcription);
}

ConservativeTriple pl_to_j3_triple() {
    const auto& plfrag = builtin("PLfrag");
    const auto& j3 = builtin("J3");
    const auto& tb = builtin_translation("pl-j3");
    ConservativeTriple triple;
    triple.tau = &tb.comb.renamed;
    triple.source_sem = &*plfrag.semantics;
    triple.host_sem = &*j3.semantics;
    triple.forward = [host = &*j3.semantics](const MatrixModel& m) {
        MatrixModel out;
        out.sem = host;
        for (const auto& [k, v] : m.valuation) out.valuation[k] = v == 1 ? 2 : 0;
        return out;
    };
    triple.backward = [source = &*plfrag.semantics](const MatrixModel& m) {
        MatrixModel out;
        out.sem = source;
        for (const auto& [k, v] : m.valuation) out.valuation[k] = v >= 1 ? 1 : 0;
        return out;
    };
    return triple;
}

}  // namespace logicfuse
