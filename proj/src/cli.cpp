#include "logicfuse/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logicfuse/audit.hpp"
#include "logicfuse/calculus_io.hpp"
#include "logicfuse/combine.hpp"
#include "logicfuse/instances.hpp"
#include "logicfuse/parse.hpp"
#include "logicfuse/search.hpp"
#include "logicfuse/semantics.hpp"

namespace logicfuse {

namespace {

using nlohmann::json;

constexpr int kOk = 0, kNegative = 1, kError = 2;

json to_json(const Multiset& m) {
    json a = json::array();
    for (const auto& f : m.elems()) a.push_back(render(f));
    return a;
}

json to_json(const Sequent& s) { return json{{"left", to_json(s.left)}, {"right", to_json(s.right)}}; }

json to_json(const Derivation& d) {
    json a = json::array();
    for (size_t i = 0; i < d.lines.size(); ++i) {
        const auto& l = d.lines[i];
        a.push_back(json{{"line", i + 1},
                         {"sequent", to_json(l.sequent)},
                         {"rule", l.rule},
                         {"premises", l.premises}});
    }
    return a;
}

// A logic argument is a built-in name or a path to a logic-definition
// file. File-backed bundles live for the duration of the command.
struct LoadedLogic {
    const LogicBundle* bundle = nullptr;
    std::unique_ptr<LogicBundle> owned;

    const LogicBundle& get() const { return owned ? *owned : *bundle; }
};

std::optional<LoadedLogic> load_logic(const std::string& spec, std::ostream& err) {
    if (const LogicBundle* b = find_builtin(spec)) {
        LoadedLogic l;
        l.bundle = b;
        return l;
    }
    std::ifstream in(spec);
    if (!in) {
        err << "error: '" << spec << "' is neither a built-in logic nor a readable file\n";
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto parsed = parse_logic_file(ss.str());
    if (!parsed.ok()) {
        err << "error: " << spec << ": " << parsed.error().to_string() << "\n";
        return std::nullopt;
    }
    LoadedLogic l;
    l.owned = std::make_unique<LogicBundle>();
    l.owned->name = parsed.value().name;
    l.owned->sig = parsed.value().sig;
    l.owned->calculus = parsed.value().calculus;
    l.owned->semantics = parsed.value().semantics;
    return l;
}

std::optional<Formula> parse_input_formula(const std::string& text, const Signature& sig,
                                           std::ostream& err) {
    auto f = parse_formula(text, sig);
    if (!f.ok()) {
        err << "error: " << f.error().to_string() << "\n";
        return std::nullopt;
    }
    return std::move(f).value();
}

int cmd_translate(const std::string& from, const std::string& to, const std::string& trans_name,
                  const std::string& text, bool as_json, std::ostream& out, std::ostream& err) {
    const TranslationBundle* tb = find_translation_between(from, to, trans_name);
    if (!tb) {
        err << "error: no built-in translation from " << from << " to " << to << "\n";
        return kError;
    }
    const ConstructorTranslation& t = tb->comb.renamed;
    auto f = parse_input_formula(text, t.source, err);
    if (!f) return kError;
    Formula image = translate(t, *f);
    if (as_json)
        out << json{{"command", "translate"},
                    {"translation", tb->name},
                    {"input", render(*f)},
                    {"output", render(image)}}
                   .dump(2)
            << "\n";
    else
        out << render(image) << "\n";
    return kOk;
}

int cmd_flatten(const std::string& logic, const std::string& text, bool as_json, std::ostream& out,
                std::ostream& err) {
    const CombinationBundle* cb = find_builtin_combination(logic);
    if (!cb) {
        err << "error: '" << logic << "' is not a built-in combined logic\n";
        return kError;
    }
    auto f = parse_input_formula(text, cb->comb.combined, err);
    if (!f) return kError;
    Formula image = flatten(cb->comb, *f);
    if (as_json)
        out << json{{"command", "flatten"},
                    {"logic", logic},
                    {"input", render(*f)},
                    {"output", render(image)}}
                   .dump(2)
            << "\n";
    else
        out << render(image) << "\n";
    return kOk;
}

int cmd_prove(const std::string& logic, const std::string& text, const SearchConfig& cfg,
              const std::string& output_file, bool as_json, std::ostream& out, std::ostream& err) {
    auto loaded = load_logic(logic, err);
    if (!loaded) return kError;
    const LogicBundle& b = loaded->get();
    if (!b.calculus) {
        err << "error: " << b.name << " has no calculus\n";
        return kError;
    }
    Sequent goal;
    if (text.find("=>") != std::string::npos) {
        auto s = parse_sequent(text, b.sig);
        if (!s.ok()) {
            err << "error: " << s.error().to_string() << "\n";
            return kError;
        }
        goal = std::move(s).value();
    } else {
        auto f = parse_input_formula(text, b.sig, err);
        if (!f) return kError;
        goal.right.insert(*f);
    }
    SearchOutcome outcome = prove(*b.calculus, goal, cfg);
    if (as_json) {
        json j{{"command", "prove"},
               {"logic", b.name},
               {"goal", to_json(goal)},
               {"verdict", to_string(outcome.verdict)},
               {"expansions", outcome.expansions}};
        if (outcome.derivation) j["derivation"] = to_json(*outcome.derivation);
        out << j.dump(2) << "\n";
    } else if (outcome.verdict == Verdict::Proved) {
        out << outcome.derivation->render();
    } else {
        out << to_string(outcome.verdict) << "\n";
    }
    if (!output_file.empty() && outcome.derivation) {
        std::ofstream f(output_file);
        if (!f) {
            err << "error: cannot write " << output_file << "\n";
            return kError;
        }
        f << outcome.derivation->render();
    }
    return outcome.verdict == Verdict::Proved ? kOk : kNegative;
}

int cmd_check(const std::string& logic, const std::string& file, const std::string& goal_text,
              bool as_json, std::ostream& out, std::ostream& err) {
    auto loaded = load_logic(logic, err);
    if (!loaded) return kError;
    const LogicBundle& b = loaded->get();
    if (!b.calculus) {
        err << "error: " << b.name << " has no calculus\n";
        return kError;
    }
    std::string content;
    if (file == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        content = ss.str();
    } else {
        std::ifstream in(file);
        if (!in) {
            err << "error: cannot read " << file << "\n";
            return kError;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    }
    auto parsed = parse_derivation(content, b.sig);
    if (!parsed.ok()) {
        err << "error: " << parsed.error().to_string() << "\n";
        return kError;
    }
    const Derivation d = std::move(parsed).value();
    std::optional<CheckDiagnostic> diag = check_derivation(*b.calculus, d);
    bool goal_ok = true;
    std::string goal_reason;
    if (!goal_text.empty()) {
        auto g = parse_sequent(goal_text, b.sig);
        if (!g.ok()) {
            err << "error: " << g.error().to_string() << "\n";
            return kError;
        }
        if (!(d.lines.front().sequent == g.value())) {
            goal_ok = false;
            goal_reason = "line 1 is not the requested goal";
        }
    }
    const bool ok = !diag && goal_ok;
    if (as_json) {
        json j{{"command", "check"}, {"logic", b.name}, {"ok", ok}};
        if (diag) {
            j["line"] = diag->line;
            j["reason"] = diag->reason;
        } else if (!goal_ok) {
            j["reason"] = goal_reason;
        }
        out << j.dump(2) << "\n";
    } else if (ok) {
        out << "ok (" << d.lines.size() << " lines)\n";
    } else if (diag) {
        out << "line " << diag->line << ": " << diag->reason << "\n";
    } else {
        out << goal_reason << "\n";
    }
    return ok ? kOk : kNegative;
}

int cmd_validate(const std::string& logic, const std::string& flatten_logic,
                 const std::string& text, bool as_json, std::ostream& out, std::ostream& err) {
    // Resolve the evaluation pipeline: an explicit --flatten, a combined
    // logic (flatten into its host), or a logic with its own tables.
    const CombinationBundle* cb = nullptr;
    const LogicBundle* sem_bundle = nullptr;
    const Signature* parse_sig = nullptr;
    if (!flatten_logic.empty()) {
        cb = find_builtin_combination(flatten_logic);
        if (!cb) {
            err << "error: '" << flatten_logic << "' is not a built-in combined logic\n";
            return kError;
        }
        sem_bundle = cb->host;
        parse_sig = &cb->comb.combined;
        if (logic != sem_bundle->name) {
            err << "error: --flatten " << flatten_logic << " evaluates in " << sem_bundle->name
                << ", not " << logic << "\n";
            return kError;
        }
    } else if ((cb = find_builtin_combination(logic))) {
        sem_bundle = cb->host;
        parse_sig = &cb->comb.combined;
    } else {
        const LogicBundle* b = find_builtin(logic);
        if (!b) {
            err << "error: unknown logic " << logic << "\n";
            return kError;
        }
        sem_bundle = b;
        parse_sig = &b->sig;
    }
    if (!sem_bundle->semantics) {
        err << "error: " << sem_bundle->name << " has no matrix semantics\n";
        return kError;
    }
    auto f = parse_input_formula(text, *parse_sig, err);
    if (!f) return kError;
    Formula target = cb ? flatten(cb->comb, *f) : *f;
    const bool is_valid = valid(*sem_bundle->semantics, target);
    if (as_json) {
        out << json{{"command", "validate"},
                    {"logic", sem_bundle->name},
                    {"formula", render(*f)},
                    {"evaluated", render(target)},
                    {"valid", is_valid}}
                   .dump(2)
            << "\n";
    } else {
        out << (is_valid ? "valid" : "invalid") << "\n";
    }
    return is_valid ? kOk : kNegative;
}

int cmd_combine(const std::string& logic, const std::string& export_file, bool as_json,
                std::ostream& out, std::ostream& err) {
    const CombinationBundle* cb = find_builtin_combination(logic);
    if (!cb) {
        err << "error: '" << logic << "' is not a built-in combined logic\n";
        return kError;
    }
    CalculusDiff diff = crosscheck(*cb);
    LogicFile lf;
    lf.name = cb->name;
    lf.sig = cb->comb.combined;
    lf.calculus = cb->generated;
    const std::string exported = export_logic_file(lf);
    if (!export_file.empty()) {
        std::ofstream f(export_file);
        if (!f) {
            err << "error: cannot write " << export_file << "\n";
            return kError;
        }
        f << exported;
    }
    if (as_json) {
        out << json{{"command", "combine"},
                    {"logic", cb->name},
                    {"crosscheck_ok", diff.ok()},
                    {"crosscheck", diff.render()},
                    {"calculus", exported}}
                   .dump(2)
            << "\n";
    } else {
        out << exported;
        out << "# crosscheck against the transcription: "
            << (diff.ok() ? "ok" : "\n" + diff.render()) << "\n";
    }
    return diff.ok() ? kOk : kNegative;
}

json to_json(const AuditReport& rep) {
    json c = json::array();
    for (const auto& ce : rep.counterexamples)
        c.push_back(json{{"formula", ce.formula},
                         {"valuation", ce.valuation},
                         {"condition", ce.condition == AuditCounterexample::Condition::Forward
                                           ? "forward"
                                           : "backward"}});
    return json{{"formulas", rep.formulas}, {"checks", rep.checks}, {"counterexamples", c}};
}

int cmd_audit(const std::string& kind, const std::string& logic, int depth, int vars, int samples,
              uint64_t seed, bool serial, bool as_json, std::ostream& out, std::ostream& err) {
    const Exec exec = serial ? Exec::Serial : Exec::Parallel;
    std::vector<uint32_t> var_ids;
    for (int i = 1; i <= vars; ++i) var_ids.push_back(static_cast<uint32_t>(i));

    if (kind == "conservativity") {
        AuditReport rep = check_conservative_translation(pl_to_j3_triple(), var_ids, depth, exec);
        if (as_json) {
            out << json{{"command", "audit"}, {"kind", kind}, {"report", to_json(rep)}}.dump(2)
                << "\n";
        } else {
            out << "conservativity audit: " << rep.formulas << " formulas, " << rep.checks
                << " checks, " << rep.counterexamples.size() << " counterexample(s)\n";
            for (const auto& ce : rep.counterexamples)
                out << "  " << (ce.condition == AuditCounterexample::Condition::Forward
                                    ? "forward"
                                    : "backward")
                    << " fails at " << ce.formula << " under " << ce.valuation << "\n";
        }
        return rep.ok() ? kOk : kNegative;
    }

    if (kind == "crosscheck") {
        std::vector<std::string> names =
            logic.empty() ? builtin_combination_names() : std::vector<std::string>{logic};
        bool all_ok = true;
        json items = json::array();
        for (const auto& name : names) {
            const CombinationBundle* cb = find_builtin_combination(name);
            if (!cb) {
                err << "error: '" << name << "' is not a built-in combined logic\n";
                return kError;
            }
            CalculusDiff diff = crosscheck(*cb);
            all_ok = all_ok && diff.ok();
            if (as_json)
                items.push_back(json{{"logic", name}, {"ok", diff.ok()}, {"diff", diff.render()}});
            else
                out << name << ": " << (diff.ok() ? "ok" : "\n" + diff.render()) << "\n";
        }
        if (as_json)
            out << json{{"command", "audit"}, {"kind", kind}, {"results", items}}.dump(2) << "\n";
        return all_ok ? kOk : kNegative;
    }

    if (kind == "correspondence") {
        const CombinationBundle* cb = find_builtin_combination(logic.empty() ? "PLJ" : logic);
        if (!cb) {
            err << "error: '" << logic << "' is not a built-in combined logic\n";
            return kError;
        }
        const GentzenCalculus& host_calc = *cb->host->calculus;
        FormulaSpace space(cb->comb.combined, var_ids, depth);
        auto indices = sample_indices(space, static_cast<size_t>(samples), seed);
        SearchConfig cfg;
        cfg.max_depth = 30;
        uint64_t agree = 0, inconclusive = 0;
        std::vector<std::string> disagreements;
        for (uint64_t idx : indices) {
            Formula f = space.at(idx);
            TransferReport rep =
                theoremhood_transfer(cb->generated, host_calc, cb->comb, f, cfg);
            if (rep.inconclusive)
                ++inconclusive;
            else if (rep.agree)
                ++agree;
            else
                disagreements.push_back(rep.detail);
        }
        if (as_json) {
            out << json{{"command", "audit"},
                        {"kind", kind},
                        {"logic", cb->name},
                        {"samples", indices.size()},
                        {"agree", agree},
                        {"inconclusive", inconclusive},
                        {"disagreements", disagreements}}
                       .dump(2)
                << "\n";
        } else {
            out << cb->name << " theoremhood correspondence: " << agree << " agree, "
                << inconclusive << " inconclusive, " << disagreements.size()
                << " disagreement(s) over " << indices.size() << " samples\n";
            for (const auto& d : disagreements) out << "  " << d << "\n";
        }
        return disagreements.empty() ? kOk : kNegative;
    }

    if (kind == "soundness") {
        const CombinationBundle* cb = find_builtin_combination(logic.empty() ? "CJ" : logic);
        if (!cb || !cb->host->semantics) {
            err << "error: soundness audit needs a combined logic with a semantic backend\n";
            return kError;
        }
        FormulaSpace space(cb->comb.combined, var_ids, depth);
        SearchConfig cfg;
        cfg.max_depth = 30;
        auto pred = [&](uint64_t, const Formula& f) {
            SearchOutcome o = prove_theorem(cb->generated, f, cfg);
            if (o.verdict == Verdict::DepthExhausted) return true;  // inconclusive, not a failure
            bool v = valid(*cb->host->semantics, flatten(cb->comb, f));
            return (o.verdict == Verdict::Proved) == v;
        };
        SweepReport rep = sweep_all(space, pred, exec);
        if (as_json) {
            out << json{{"command", "audit"},
                        {"kind", kind},
                        {"logic", cb->name},
                        {"checked", rep.checked},
                        {"failures", rep.failures}}
                       .dump(2)
                << "\n";
        } else {
            out << cb->name << " proof-search vs truth-table validity: " << rep.checked
                << " formulas, " << rep.failures << " disagreement(s)\n";
        }
        return rep.ok() ? kOk : kNegative;
    }

    if (kind == "self-containment") {
        auto loaded = load_logic(logic.empty() ? "It" : logic, err);
        if (!loaded) return kError;
        const LogicBundle& b = loaded->get();
        if (!b.calculus) {
            err << "error: " << b.name << " has no calculus\n";
            return kError;
        }
        SelfContainment rep = is_strictly_self_contained(*b.calculus);
        if (as_json) {
            json items = json::array();
            for (const auto& item : rep.per_rule)
                items.push_back(json{{"rule", item.rule}, {"ok", item.ok}, {"detail", item.detail}});
            out << json{{"command", "audit"}, {"kind", kind}, {"logic", b.name},
                        {"ok", rep.ok}, {"rules", items}}
                       .dump(2)
                << "\n";
        } else {
            out << b.name << " strictly self-contained: " << (rep.ok ? "yes" : "no") << "\n";
            for (const auto& item : rep.per_rule)
                if (!item.ok) out << "  " << item.rule << ": " << item.detail << "\n";
        }
        return rep.ok ? kOk : kNegative;
    }

    err << "error: unknown audit kind '" << kind << "'\n";
    return kError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coexistent combination of propositional logics via constructor translations"};
    app.name("logicfuse");
    app.require_subcommand(1);

    std::string logic, from, to, translation, text, file, output, goal, flatten_name, kind;
    int max_depth = 50, depth = 3, vars = 2, samples = 200;
    uint64_t seed = 20240901;
    bool no_loop_check = false, trace = false, as_json = false, serial = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag_callback("--json", [&] { as_json = true; }, "JSON output");
        std::function<void(const std::string&)> setter = [&](const std::string& v) {
            as_json = v == "json";
        };
        cmd->add_option_function<std::string>("--format", setter, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_translate = app.add_subcommand("translate", "translate a source formula into the host");
    c_translate->add_option("--from", from, "source logic")->required();
    c_translate->add_option("--to", to, "host logic")->required();
    c_translate->add_option("--translation", translation, "translation name when ambiguous");
    c_translate->add_option("text", text, "formula")->required();
    add_format(c_translate);

    auto* c_flatten = app.add_subcommand("flatten", "flatten a combined formula into the host");
    c_flatten->add_option("--logic", logic, "combined logic")->required();
    c_flatten->add_option("text", text, "formula")->required();
    add_format(c_flatten);

    auto* c_prove = app.add_subcommand("prove", "backward proof search");
    c_prove->add_option("--logic", logic, "logic name or definition file")->required();
    c_prove->add_option("--max-depth", max_depth, "search depth bound");
    c_prove->add_flag("--no-loop-check", no_loop_check, "disable the ancestor loop check");
    c_prove->add_flag("--trace", trace, "write a search trace to stderr");
    c_prove->add_option("--output", output, "write the derivation to a file");
    c_prove->add_option("text", text, "formula or sequent (with =>)")->required();
    add_format(c_prove);

    auto* c_check = app.add_subcommand("check", "check a derivation file");
    c_check->add_option("--logic", logic, "logic name or definition file")->required();
    c_check->add_option("--goal", goal, "require line 1 to be this sequent");
    c_check->add_option("file", file, "derivation file ('-' for stdin)")->required();
    add_format(c_check);

    auto* c_validate = app.add_subcommand("validate", "truth-table validity");
    c_validate->add_option("--logic", logic, "logic with matrix semantics")->required();
    c_validate->add_option("--flatten", flatten_name, "parse over this combined logic and flatten");
    c_validate->add_option("text", text, "formula")->required();
    add_format(c_validate);

    auto* c_combine = app.add_subcommand("combine", "print the generated combined calculus");
    c_combine->add_option("--logic", logic, "combined logic")->required();
    c_combine->add_option("--export", output, "write the logic-definition file here");
    add_format(c_combine);

    auto* c_audit = app.add_subcommand("audit", "enumeration-backed consistency audits");
    c_audit->add_option("--kind", kind,
                        "conservativity | crosscheck | correspondence | soundness | "
                        "self-containment")
        ->required();
    c_audit->add_option("--logic", logic, "logic under audit");
    c_audit->add_option("--depth", depth, "formula depth bound");
    c_audit->add_option("--vars", vars, "number of prop symbols");
    c_audit->add_option("--samples", samples, "sample count");
    c_audit->add_option("--seed", seed, "sampling seed");
    c_audit->add_flag("--serial", serial, "run the serial reference kernel");
    add_format(c_audit);

    std::vector<std::string> argv_like(args.rbegin(), args.rend());
    try {
        app.parse(argv_like);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kError;
    }

    try {
        if (app.got_subcommand(c_translate))
            return cmd_translate(from, to, translation, text, as_json, out, err);
        if (app.got_subcommand(c_flatten)) return cmd_flatten(logic, text, as_json, out, err);
        if (app.got_subcommand(c_prove)) {
            SearchConfig cfg;
            cfg.max_depth = max_depth;
            cfg.loop_check = !no_loop_check;
            cfg.trace = trace ? &err : nullptr;
            return cmd_prove(logic, text, cfg, output, as_json, out, err);
        }
        if (app.got_subcommand(c_check)) return cmd_check(logic, file, goal, as_json, out, err);
        if (app.got_subcommand(c_validate))
            return cmd_validate(logic, flatten_name, text, as_json, out, err);
        if (app.got_subcommand(c_combine)) return cmd_combine(logic, output, as_json, out, err);
        if (app.got_subcommand(c_audit))
            return cmd_audit(kind, logic, depth, vars, samples, seed, serial, as_json, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    err << "usage error: no subcommand\n";
    return kError;
}

}  // namespace logicfuse
