#include "logicfuse/sequent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace logicfuse {

// ---------------------------------------------------------------------------
// Multiset / Sequent

Multiset::Multiset(std::vector<Formula> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end(),
              [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
}

void Multiset::insert(const Formula& f) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), f,
                               [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
    elems_.insert(it, f);
}

bool Multiset::erase_one(const Formula& f) {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), f,
                               [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
    if (it == elems_.end() || !(*it == f)) return false;
    elems_.erase(it);
    return true;
}

bool Multiset::contains(const Formula& f) const {
    return std::binary_search(elems_.begin(), elems_.end(), f,
                              [](const Formula& a, const Formula& b) { return compare(a, b) < 0; });
}

Multiset Multiset::merged(const Multiset& other) const {
    Multiset out = *this;
    for (const auto& f : other.elems_) out.insert(f);
    return out;
}

bool Multiset::operator==(const Multiset& o) const {
    if (elems_.size() != o.elems_.size()) return false;
    for (size_t i = 0; i < elems_.size(); ++i)
        if (!(elems_[i] == o.elems_[i])) return false;
    return true;
}

uint64_t Multiset::hash() const {
    uint64_t h = 0x6d73ull;
    for (const auto& f : elems_) h = hash_combine(h, f.hash());
    return h;
}

uint64_t Multiset::set_hash(uint64_t salt) const {
    uint64_t h = mix64(salt);
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0 && elems_[i] == elems_[i - 1]) continue;
        h = hash_combine(h, elems_[i].hash());
    }
    return h;
}

std::string Multiset::render() const {
    std::string out;
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) out += ", ";
        out += logicfuse::render(elems_[i]);
    }
    return out;
}

uint64_t Sequent::hash() const {
    return hash_combine(hash_combine(0x7365ull, left.hash()), right.hash());
}

std::string Sequent::render() const {
    std::string out;
    if (!left.empty()) {
        out += left.render();
        out += ' ';
    }
    out += "=>";
    if (!right.empty()) {
        out += ' ';
        out += right.render();
    }
    return out;
}

std::string SequentPattern::render() const {
    auto side = [](const SidePattern& s) {
        std::string out;
        bool first = true;
        for (const auto& e : s.elems) {
            if (!first) out += ", ";
            first = false;
            out += logicfuse::render(e);
        }
        for (const auto& c : s.ctxs) {
            if (!first) out += ", ";
            first = false;
            if (c.modal) {
                out += c.modal->token();
                out += "[$" + c.name + "]";
            } else {
                out += "$" + c.name;
            }
        }
        return out;
    };
    std::string l = side(left), r = side(right);
    std::string out = l;
    if (!l.empty()) out += ' ';
    out += "=>";
    if (!r.empty()) out += ' ' + r;
    return out;
}

bool is_axiom_kind(RuleKind k) {
    return k == RuleKind::Axiom || k == RuleKind::AxiomC1 || k == RuleKind::AxiomToC1 ||
           k == RuleKind::AxiomBot;
}

// ---------------------------------------------------------------------------
// Schema classification

namespace {

bool all_metavars(const std::vector<Formula>& kids) {
    for (const auto& k : kids)
        if (k.kind() != FKind::MetaVar) return false;
    return true;
}

// Classifies and fills principal fields; throws on unrecognized shapes.
void classify(RuleSchema& r) {
    const SidePattern& L = r.conclusion.left;
    const SidePattern& R = r.conclusion.right;
    if (r.premises.empty()) {
        // Axiom shapes.
        if (L.elems.size() == 1 && L.elems[0].kind() == FKind::App &&
            L.elems[0].ctor().arity == 0 && R.elems.size() <= 1) {
            r.kind = RuleKind::AxiomBot;
            r.principal = L.elems[0].ctor();
            return;
        }
        if (L.elems.size() == 1 && R.elems.size() == 1 &&
            L.elems[0].kind() == FKind::PropVar && L.elems[0] == R.elems[0]) {
            r.kind = RuleKind::Axiom;
            return;
        }
        if (L.elems.size() == 1 && R.elems.size() == 1 && L.elems[0].kind() == FKind::App &&
            L.elems[0].ctor().arity == 1 && L.elems[0].children()[0].kind() == FKind::PropVar &&
            L.elems[0] == R.elems[0]) {
            r.kind = RuleKind::AxiomC1;
            r.principal1 = L.elems[0].ctor();
            return;
        }
        if (L.elems.empty() && R.elems.size() == 2) {
            // G => D, p, c1(p)
            const Formula *pv = nullptr, *app = nullptr;
            for (const auto& e : R.elems) {
                if (e.kind() == FKind::PropVar) pv = &e;
                if (e.kind() == FKind::App) app = &e;
            }
            if (pv && app && app->ctor().arity == 1 && app->children()[0] == *pv) {
                r.kind = RuleKind::AxiomToC1;
                r.principal1 = app->ctor();
                return;
            }
        }
        throw std::invalid_argument("unrecognized axiom shape: " + r.name);
    }

    auto classify_principal = [&](const Formula& e, bool left_side) -> bool {
        if (e.kind() == FKind::SourcePropVar) {
            r.kind = left_side ? RuleKind::PropTransLeft : RuleKind::PropTransRight;
            r.source_tag = e.var_tag();
            return true;
        }
        if (e.kind() != FKind::App || e.ctor().arity == 0) return false;
        if (all_metavars(e.children())) {
            r.kind = left_side ? RuleKind::Left : RuleKind::Right;
            r.principal = e.ctor();
            return true;
        }
        if (e.ctor().arity == 1 && e.children()[0].kind() == FKind::App &&
            all_metavars(e.children()[0].children())) {
            r.kind = left_side ? RuleKind::LeftTwo : RuleKind::RightTwo;
            r.principal1 = e.ctor();
            r.principal = e.children()[0].ctor();
            return true;
        }
        return false;
    };

    for (const auto& e : L.elems)
        if (classify_principal(e, true)) return;
    for (const auto& e : R.elems)
        if (classify_principal(e, false)) return;
    throw std::invalid_argument("unrecognized rule conclusion shape: " + r.name);
}

void collect_vars(const Formula& f, std::vector<std::string>& metas,
                  std::vector<std::string>& props) {
    switch (f.kind()) {
        case FKind::MetaVar:
            metas.push_back(f.var_name());
            return;
        case FKind::PropVar:
        case FKind::SourcePropVar:
            props.push_back(f.var_name());
            return;
        case FKind::App:
            for (const auto& k : f.children()) collect_vars(k, metas, props);
            return;
        default:
            return;
    }
}

struct VarSets {
    std::vector<std::string> metas, props, ctxs;
    void add(const SequentPattern& p) {
        for (const auto* side : {&p.left, &p.right}) {
            for (const auto& e : side->elems) collect_vars(e, metas, props);
            for (const auto& c : side->ctxs) ctxs.push_back(c.name);
        }
    }
    static bool subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
        for (const auto& x : a)
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        return true;
    }
};

bool pattern_well_formed(const Formula& f, const Signature& sig) {
    if (f.kind() == FKind::App) {
        if (!sig.contains(f.ctor())) return false;
        for (const auto& k : f.children())
            if (!pattern_well_formed(k, sig)) return false;
        return true;
    }
    if (f.kind() == FKind::SourcePropVar) return sig.has_sourceprops(f.var_tag());
    return true;
}

}  // namespace

bool RuleSchema::erases_context() const {
    std::vector<std::string> in_premises;
    for (const auto& p : premises) {
        for (const auto* side : {&p.left, &p.right})
            for (const auto& c : side->ctxs) in_premises.push_back(c.name);
    }
    for (const auto* side : {&conclusion.left, &conclusion.right}) {
        for (const auto& c : side->ctxs) {
            if (std::find(in_premises.begin(), in_premises.end(), c.name) == in_premises.end())
                return true;
        }
    }
    return false;
}

namespace {

// Canonical variable renaming for shape comparison.
struct Renamer {
    std::map<std::string, std::string> metas, props, ctxs;
    Formula rename(const Formula& f) {
        switch (f.kind()) {
            case FKind::MetaVar: {
                auto [it, fresh] = metas.try_emplace(f.var_name(),
                                                     "m" + std::to_string(metas.size() + 1));
                (void)fresh;
                return Formula::meta(it->second);
            }
            case FKind::PropVar: {
                auto [it, _] = props.try_emplace(f.var_name(),
                                                 "q" + std::to_string(props.size() + 1));
                return Formula::prop_var(it->second);
            }
            case FKind::SourcePropVar: {
                auto [it, _] = props.try_emplace(f.var_name(),
                                                 "q" + std::to_string(props.size() + 1));
                return Formula::source_prop_var(it->second, f.var_tag());
            }
            case FKind::App: {
                std::vector<Formula> kids;
                kids.reserve(f.children().size());
                for (const auto& k : f.children()) kids.push_back(rename(k));
                return Formula::app(f.ctor(), std::move(kids));
            }
            default:
                return f;
        }
    }
    SequentPattern rename(const SequentPattern& p) {
        SequentPattern out;
        for (auto [src, dst] : {std::pair{&p.left, &out.left}, std::pair{&p.right, &out.right}}) {
            for (const auto& e : src->elems) dst->elems.push_back(rename(e));
            for (const auto& c : src->ctxs) {
                auto [it, _] = ctxs.try_emplace(c.name, "c" + std::to_string(ctxs.size() + 1));
                dst->ctxs.push_back(ContextVar{it->second, c.modal});
            }
        }
        return out;
    }
};

}  // namespace

std::string RuleSchema::shape() const {
    Renamer rn;
    std::string out = rn.rename(conclusion).render();
    for (const auto& p : premises) {
        out += "  <-  ";
        out += rn.rename(p).render();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Calculus construction

GentzenCalculus::GentzenCalculus(std::string name, Signature sig, SuccedentMode mode,
                                 std::vector<RuleSchema> schemas)
    : name_(std::move(name)), sig_(std::move(sig)), mode_(mode), schemas_(std::move(schemas)) {
    for (auto& r : schemas_) {
        classify(r);
        for (const auto& p : r.premises) {
            for (const auto* side : {&p.left, &p.right})
                for (const auto& e : side->elems)
                    if (!pattern_well_formed(e, sig_))
                        throw std::invalid_argument(name_ + "/" + r.name +
                                                    ": premise pattern outside signature");
        }
        for (const auto* side : {&r.conclusion.left, &r.conclusion.right}) {
            for (const auto& e : side->elems)
                if (!pattern_well_formed(e, sig_))
                    throw std::invalid_argument(name_ + "/" + r.name +
                                                ": conclusion pattern outside signature");
            int plain = 0;
            for (const auto& c : side->ctxs)
                if (!c.modal) ++plain;
            if (plain > 1)
                throw std::invalid_argument(name_ + "/" + r.name +
                                            ": more than one plain context variable on a side");
        }
        VarSets concl, prem;
        concl.add(r.conclusion);
        for (const auto& p : r.premises) prem.add(p);
        if (!VarSets::subset(prem.metas, concl.metas) ||
            !VarSets::subset(prem.props, concl.props) || !VarSets::subset(prem.ctxs, concl.ctxs))
            throw std::invalid_argument(name_ + "/" + r.name +
                                        ": premise variable missing from conclusion");
    }
    for (size_t i = 0; i < schemas_.size(); ++i)
        for (size_t j = i + 1; j < schemas_.size(); ++j)
            if (schemas_[i].name == schemas_[j].name)
                throw std::invalid_argument(name_ + ": duplicate rule name " + schemas_[i].name);

    // Ax_{c1} present iff Ax_{->c1} present, per unary constructor.
    std::vector<Constructor> ax_c1, ax_to_c1;
    for (const auto& r : schemas_) {
        if (r.kind == RuleKind::AxiomC1) ax_c1.push_back(*r.principal1);
        if (r.kind == RuleKind::AxiomToC1) ax_to_c1.push_back(*r.principal1);
    }
    for (const auto& c : ax_c1)
        if (std::find(ax_to_c1.begin(), ax_to_c1.end(), c) == ax_to_c1.end())
            throw std::invalid_argument(name_ + ": axiom pair incomplete for " + c.token());
    for (const auto& c : ax_to_c1)
        if (std::find(ax_c1.begin(), ax_c1.end(), c) == ax_c1.end())
            throw std::invalid_argument(name_ + ": axiom pair incomplete for " + c.token());

    // A c1 of a two-constructor rule admits no plain left/right rules.
    for (const auto& r : schemas_) {
        if (r.kind != RuleKind::LeftTwo && r.kind != RuleKind::RightTwo) continue;
        for (const auto& o : schemas_) {
            if ((o.kind == RuleKind::Left || o.kind == RuleKind::Right) &&
                *o.principal == *r.principal1)
                throw std::invalid_argument(name_ + ": plain rule " + o.name +
                                            " conflicts with two-constructor rule " + r.name);
        }
    }
}

const RuleSchema* GentzenCalculus::find(std::string_view rule_name) const {
    for (const auto& r : schemas_)
        if (r.name == rule_name) return &r;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Backward matching

namespace {

struct Bindings {
    std::map<std::string, Formula> metas;
    std::map<std::string, uint32_t> props;   // shared by @p and @p.tag
    std::map<std::string, Multiset> ctxs;
};

bool unify(const Formula& pat, const Formula& f, Bindings& b) {
    switch (pat.kind()) {
        case FKind::MetaVar: {
            auto it = b.metas.find(pat.var_name());
            if (it != b.metas.end()) return it->second == f;
            b.metas.emplace(pat.var_name(), f);
            return true;
        }
        case FKind::PropVar: {
            if (f.kind() != FKind::Prop) return false;
            auto it = b.props.find(pat.var_name());
            if (it != b.props.end()) return it->second == f.prop_index();
            b.props.emplace(pat.var_name(), f.prop_index());
            return true;
        }
        case FKind::SourcePropVar: {
            if (f.kind() != FKind::App || f.ctor().arity != 0) return false;
            if (f.ctor().tag != pat.var_tag()) return false;
            auto idx = prop_base_index(f.ctor().base);
            if (!idx) return false;
            auto it = b.props.find(pat.var_name());
            if (it != b.props.end()) return it->second == *idx;
            b.props.emplace(pat.var_name(), *idx);
            return true;
        }
        case FKind::Prop:
            return f.kind() == FKind::Prop && f.prop_index() == pat.prop_index();
        case FKind::App: {
            if (f.kind() != FKind::App || !(f.ctor() == pat.ctor())) return false;
            for (size_t i = 0; i < pat.children().size(); ++i)
                if (!unify(pat.children()[i], f.children()[i], b)) return false;
            return true;
        }
    }
    return false;
}

// Assigns element patterns to distinct occurrences of goal formulas and
// distributes the remainder over context variables. Calls sink for every
// complete extension of the incoming bindings.
struct SideMatcher {
    const SidePattern& pattern;
    std::vector<std::function<void(const Bindings&)>>* unused = nullptr;

    template <typename Sink>
    static void run(const SidePattern& pattern, const Multiset& goal, const Bindings& b0,
                    const Sink& sink) {
        match_elems(pattern, 0, goal, b0, sink);
    }

  private:
    template <typename Sink>
    static void match_elems(const SidePattern& pattern, size_t ei, Multiset rest, Bindings b,
                            const Sink& sink) {
        if (ei == pattern.elems.size()) {
            match_ctxs(pattern, 0, std::move(rest), std::move(b), sink);
            return;
        }
        const auto& elems = rest.elems();
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i > 0 && elems[i] == elems[i - 1]) continue;  // same value, same match
            Bindings b2 = b;
            if (!unify(pattern.elems[ei], elems[i], b2)) continue;
            Multiset rest2 = rest;
            rest2.erase_one(elems[i]);
            match_elems(pattern, ei + 1, std::move(rest2), std::move(b2), sink);
        }
    }

    // Enumerates sub-multisets of the qualifying elements for each modal
    // context (largest first); the plain context, when present, absorbs
    // what is left, otherwise the remainder must be empty.
    template <typename Sink>
    static void match_ctxs(const SidePattern& pattern, size_t ci, Multiset rest, Bindings b,
                           const Sink& sink) {
        if (ci == pattern.ctxs.size()) {
            if (rest.empty()) sink(b);
            return;
        }
        const ContextVar& cv = pattern.ctxs[ci];
        if (!cv.modal) {
            // defer plain context to the very end so modal ones see the
            // right candidate pool
            bool later_modal = false;
            for (size_t j = ci + 1; j < pattern.ctxs.size(); ++j)
                if (pattern.ctxs[j].modal) later_modal = true;
            if (later_modal) {
                // re-order: move this ctx to the back
                SidePattern re = pattern;
                std::rotate(re.ctxs.begin() + static_cast<long>(ci),
                            re.ctxs.begin() + static_cast<long>(ci) + 1, re.ctxs.end());
                match_ctxs(re, ci, std::move(rest), std::move(b), sink);
                return;
            }
            b.ctxs.emplace(cv.name, rest);
            match_ctxs(pattern, ci + 1, Multiset{}, std::move(b), sink);
            return;
        }
        // Distinct qualifying values with multiplicities.
        std::vector<std::pair<Formula, int>> cand;
        for (const auto& f : rest.elems()) {
            if (f.kind() != FKind::App || !(f.ctor() == *cv.modal)) continue;
            if (!cand.empty() && cand.back().first == f)
                cand.back().second++;
            else
                cand.emplace_back(f, 1);
        }
        // Odometer over per-value counts, starting from taking everything.
        std::vector<int> take(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) take[i] = cand[i].second;
        while (true) {
            Multiset inner, taken;
            for (size_t i = 0; i < cand.size(); ++i) {
                for (int k = 0; k < take[i]; ++k) {
                    inner.insert(cand[i].first.children()[0]);
                    taken.insert(cand[i].first);
                }
            }
            Multiset rest2 = rest;
            for (const auto& f : taken.elems()) rest2.erase_one(f);
            Bindings b2 = b;
            b2.ctxs.emplace(cv.name, std::move(inner));
            match_ctxs(pattern, ci + 1, std::move(rest2), std::move(b2), sink);
            // next combination: decrement odometer (counts run from full
            // to empty, last position fastest)
            size_t i = cand.size();
            while (i > 0) {
                --i;
                if (take[i] > 0) {
                    --take[i];
                    for (size_t j = i + 1; j < cand.size(); ++j) take[j] = cand[j].second;
                    break;
                }
                if (i == 0) return;
            }
            if (cand.empty()) return;
        }
    }
};

Formula instantiate(const Formula& pat, const Bindings& b) {
    switch (pat.kind()) {
        case FKind::MetaVar: {
            auto it = b.metas.find(pat.var_name());
            if (it == b.metas.end())
                throw std::logic_error("unbound metavariable ?" + pat.var_name());
            return it->second;
        }
        case FKind::PropVar: {
            auto it = b.props.find(pat.var_name());
            if (it == b.props.end())
                throw std::logic_error("unbound prop variable @" + pat.var_name());
            return Formula::prop(it->second);
        }
        case FKind::SourcePropVar: {
            auto it = b.props.find(pat.var_name());
            if (it == b.props.end())
                throw std::logic_error("unbound prop variable @" + pat.var_name());
            return Formula::source_prop(it->second, pat.var_tag());
        }
        case FKind::App: {
            std::vector<Formula> kids;
            kids.reserve(pat.children().size());
            for (const auto& k : pat.children()) kids.push_back(instantiate(k, b));
            return Formula::app(pat.ctor(), std::move(kids));
        }
        default:
            return pat;
    }
}

Sequent instantiate(const SequentPattern& p, const Bindings& b) {
    Sequent out;
    for (auto [side, dst] : {std::pair{&p.left, &out.left}, std::pair{&p.right, &out.right}}) {
        for (const auto& e : side->elems) dst->insert(instantiate(e, b));
        for (const auto& c : side->ctxs) {
            auto it = b.ctxs.find(c.name);
            if (it == b.ctxs.end()) throw std::logic_error("unbound context $" + c.name);
            if (c.modal) {
                for (const auto& f : it->second.elems())
                    dst->insert(Formula::app(*c.modal, {f}));
            } else {
                for (const auto& f : it->second.elems()) dst->insert(f);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Sequent>> match_backward(const RuleSchema& schema, const Sequent& goal) {
    std::vector<std::vector<Sequent>> out;
    auto emit = [&](const Bindings& b) {
        std::vector<Sequent> premises;
        premises.reserve(schema.premises.size());
        for (const auto& p : schema.premises) premises.push_back(instantiate(p, b));
        for (const auto& seen : out)
            if (seen == premises) return;
        out.push_back(std::move(premises));
    };
    SideMatcher::run(schema.conclusion.left, goal.left, Bindings{}, [&](const Bindings& bl) {
        SideMatcher::run(schema.conclusion.right, goal.right, bl,
                         [&](const Bindings& b) { emit(b); });
    });
    return out;
}

// ---------------------------------------------------------------------------
// Derivation checking

std::string Derivation::render() const {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i) {
        out += std::to_string(i + 1);
        out += ". ";
        out += lines[i].sequent.render();
        out += " ; ";
        out += lines[i].rule;
        for (int p : lines[i].premises) {
            out += ' ';
            out += std::to_string(p);
        }
        out += '\n';
    }
    return out;
}

std::optional<CheckDiagnostic> check_derivation(const GentzenCalculus& g, const Derivation& d) {
    const int n = static_cast<int>(d.lines.size());
    if (n == 0) return CheckDiagnostic{0, "empty derivation"};
    for (int j = 1; j <= n; ++j) {
        const auto& line = d.lines[static_cast<size_t>(j - 1)];
        const RuleSchema* schema = g.find(line.rule);
        if (!schema) return CheckDiagnostic{j, "unknown rule: " + line.rule};
        if (schema->is_axiom()) {
            if (!line.premises.empty())
                return CheckDiagnostic{j, "axiom " + line.rule + " cites premises"};
            if (match_backward(*schema, line.sequent).empty())
                return CheckDiagnostic{j, "not an instance of axiom " + line.rule};
            continue;
        }
        if (line.premises.size() != schema->premises.size())
            return CheckDiagnostic{j, line.rule + " takes " +
                                          std::to_string(schema->premises.size()) +
                                          " premise(s), " +
                                          std::to_string(line.premises.size()) + " cited"};
        std::vector<Sequent> cited;
        for (int k : line.premises) {
            if (k <= j)
                return CheckDiagnostic{j, "premise reference " + std::to_string(k) +
                                              " does not point to a later line"};
            if (k > n)
                return CheckDiagnostic{j, "dangling premise reference " + std::to_string(k)};
            cited.push_back(d.lines[static_cast<size_t>(k - 1)].sequent);
        }
        bool found = false;
        for (const auto& premises : match_backward(*schema, line.sequent)) {
            if (premises == cited) {
                found = true;
                break;
            }
        }
        if (!found)
            return CheckDiagnostic{
                j, line.rule + " does not instantiate to the cited premises (multiset mismatch)"};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Strict self-containment (relaxed reading)

SelfContainment is_strictly_self_contained(const GentzenCalculus& g) {
    SelfContainment report;
    for (const auto& r : g.schemas()) {
        bool constructor_rule = r.kind == RuleKind::Left || r.kind == RuleKind::Right ||
                                r.kind == RuleKind::LeftTwo || r.kind == RuleKind::RightTwo;
        if (!constructor_rule) continue;

        const Formula* principal = nullptr;
        for (const auto* side : {&r.conclusion.left, &r.conclusion.right}) {
            for (const auto& e : side->elems)
                if (e.kind() == FKind::App && e.ctor().arity > 0) principal = &e;
        }
        std::vector<Formula> betas;  // principal metavariables
        if (principal) {
            const Formula& inner = (r.kind == RuleKind::LeftTwo || r.kind == RuleKind::RightTwo)
                                       ? principal->children()[0]
                                       : *principal;
            for (const auto& k : inner.children()) betas.push_back(k);
        }
        auto allowed = [&](const Formula& e) {
            if (e.kind() == FKind::MetaVar) {
                for (const auto& b : betas)
                    if (b == e) return true;
                return false;
            }
            if (e.kind() == FKind::App) {
                if (e.ctor().arity == 0) return true;  // constant like bot
                if (principal && e == *principal) return true;
                if ((r.kind == RuleKind::LeftTwo || r.kind == RuleKind::RightTwo) &&
                    e.ctor() == *r.principal1 && e.children().size() == 1) {
                    for (const auto& b : betas)
                        if (b == e.children()[0]) return true;
                }
                return false;
            }
            return false;
        };

        std::string detail;
        for (const auto& p : r.premises) {
            for (const auto* side : {&p.left, &p.right}) {
                for (const auto& e : side->elems) {
                    if (!allowed(e)) {
                        if (!detail.empty()) detail += "; ";
                        detail += "premise formula " + render(e) + " is not self-contained";
                    }
                }
            }
        }
        bool ok = detail.empty();
        report.ok = report.ok && ok;
        report.per_rule.push_back({r.name, ok, detail});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Structural diff

std::string CalculusDiff::render() const {
    std::string out;
    for (const auto& m : mismatched) out += "mismatch: " + m + "\n";
    for (const auto& m : missing) out += "missing: " + m + "\n";
    for (const auto& m : extra) out += "extra: " + m + "\n";
    if (out.empty()) out = "ok\n";
    return out;
}

CalculusDiff diff_calculi(const GentzenCalculus& generated, const GentzenCalculus& transcription) {
    CalculusDiff diff;
    if (generated.mode() != transcription.mode()) diff.mismatched.push_back("succedent mode");

    auto sig_tokens = [](const Signature& s) {
        std::vector<std::string> out;
        for (const auto& c : s.constructors())
            out.push_back(c.token() + "/" + std::to_string(c.arity));
        for (const auto& t : s.sourceprop_tags()) out.push_back("sourceprops." + t);
        std::sort(out.begin(), out.end());
        return out;
    };
    if (sig_tokens(generated.signature()) != sig_tokens(transcription.signature()))
        diff.mismatched.push_back("signature");

    std::multimap<std::string, std::string> gen, tra;
    for (const auto& r : generated.schemas()) gen.emplace(r.shape(), r.name);
    for (const auto& r : transcription.schemas()) tra.emplace(r.shape(), r.name);
    for (const auto& [shape, name] : tra) {
        auto it = gen.find(shape);
        if (it == gen.end())
            diff.missing.push_back(name + ": " + shape);
        else
            gen.erase(it);
    }
    for (const auto& [shape, name] : gen) diff.extra.push_back(name + ": " + shape);
    return diff;
}

}  // namespace logicfuse
