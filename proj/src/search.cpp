#include "logicfuse/search.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <unordered_map>

namespace logicfuse {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::NotProvable: return "not_provable";
        case Verdict::DepthExhausted: return "depth_exhausted";
    }
    return "?";
}

namespace {

struct ProofNode {
    Sequent sequent;
    std::string rule;
    std::vector<std::shared_ptr<const ProofNode>> premises;
};

using ProofPtr = std::shared_ptr<const ProofNode>;

enum class Status : uint8_t { Proved, Failed, Unknown };

struct LoopKey {
    uint64_t a, b;
    bool operator==(const LoopKey& o) const { return a == o.a && b == o.b; }
};

LoopKey loop_key(const Sequent& s) {
    return LoopKey{hash_combine(s.left.set_hash(0x4c31), s.right.set_hash(0x5231)),
                   hash_combine(s.right.set_hash(0x4c32), s.left.set_hash(0x5232))};
}

struct Searcher {
    const GentzenCalculus& g;
    const SearchConfig& cfg;
    std::vector<const RuleSchema*> order;
    uint64_t expansions = 0;
    // Proved subgoals are context independent, so they can be reused
    // across branches; failures depend on the ancestor chain and cannot.
    std::unordered_map<uint64_t, std::vector<std::pair<Sequent, ProofPtr>>> proved;

    const ProofPtr* lookup_proved(const Sequent& s) const {
        auto it = proved.find(s.hash());
        if (it == proved.end()) return nullptr;
        for (const auto& [seq, node] : it->second)
            if (seq == s) return &node;
        return nullptr;
    }

    Status search(const Sequent& goal, int depth, std::vector<LoopKey>& ancestors, ProofPtr& out) {
        if (const ProofPtr* hit = lookup_proved(goal)) {
            out = *hit;
            return Status::Proved;
        }
        const LoopKey key = loop_key(goal);
        if (cfg.loop_check) {
            for (const auto& k : ancestors)
                if (k == key) return Status::Failed;
        }

        bool any_unknown = false;
        ancestors.push_back(key);
        for (const RuleSchema* schema : order) {
            auto matches = match_backward(*schema, goal);
            if (matches.empty()) continue;
            if (!schema->is_axiom() && depth <= 0) {
                // The rule applies but the bound is spent: this subtree is
                // open, not exhausted.
                any_unknown = true;
                continue;
            }
            ++expansions;
            if (cfg.trace)
                (*cfg.trace) << "depth " << (cfg.max_depth - depth) << " rule " << schema->name
                             << " goal " << goal.render() << "\n";
            for (const auto& premises : matches) {
                std::vector<ProofPtr> subs;
                bool failed = false, unknown = false;
                for (const auto& p : premises) {
                    ProofPtr sub;
                    Status st = search(p, depth - 1, ancestors, sub);
                    if (st == Status::Failed) {
                        failed = true;
                        break;
                    }
                    if (st == Status::Unknown) {
                        unknown = true;
                        break;
                    }
                    subs.push_back(std::move(sub));
                }
                if (failed) continue;
                if (unknown) {
                    any_unknown = true;
                    continue;
                }
                auto node = std::make_shared<ProofNode>();
                node->sequent = goal;
                node->rule = schema->name;
                node->premises = std::move(subs);
                out = node;
                proved[goal.hash()].emplace_back(goal, node);
                ancestors.pop_back();
                return Status::Proved;
            }
        }
        ancestors.pop_back();
        return any_unknown ? Status::Unknown : Status::Failed;
    }
};

int linearize(const ProofNode& node, Derivation& d) {
    d.lines.push_back({node.sequent, node.rule, {}});
    const size_t my_index = d.lines.size() - 1;
    std::vector<int> cited;
    cited.reserve(node.premises.size());
    for (const auto& p : node.premises) cited.push_back(linearize(*p, d));
    d.lines[my_index].premises = std::move(cited);
    return static_cast<int>(my_index + 1);
}

}  // namespace

SearchOutcome prove(const GentzenCalculus& g, const Sequent& goal, const SearchConfig& cfg) {
    Searcher s{g, cfg, {}, 0, {}};
    if (!cfg.rule_order.empty()) {
        for (const auto& name : cfg.rule_order) {
            const RuleSchema* r = g.find(name);
            if (!r) throw std::invalid_argument("rule_order names unknown rule " + name);
            s.order.push_back(r);
        }
        for (const auto& r : g.schemas()) {
            if (std::find(cfg.rule_order.begin(), cfg.rule_order.end(), r.name) ==
                cfg.rule_order.end())
                s.order.push_back(&r);
        }
    } else {
        auto rank = [](const RuleSchema& r) {
            if (r.is_axiom()) return 0;
            if (r.erases_context()) return 3;
            return r.premises.size() <= 1 ? 1 : 2;
        };
        for (int cls = 0; cls <= 3; ++cls) {
            for (const auto& r : g.schemas())
                if (rank(r) == cls) s.order.push_back(&r);
        }
    }

    std::vector<LoopKey> ancestors;
    ProofPtr root;
    Status st = s.search(goal, cfg.max_depth, ancestors, root);
    SearchOutcome out;
    out.expansions = s.expansions;
    switch (st) {
        case Status::Proved: {
            out.verdict = Verdict::Proved;
            Derivation d;
            linearize(*root, d);
            out.derivation = std::move(d);
            break;
        }
        case Status::Failed:
            out.verdict = Verdict::NotProvable;
            break;
        case Status::Unknown:
            out.verdict = Verdict::DepthExhausted;
            break;
    }
    return out;
}

SearchOutcome prove_theorem(const GentzenCalculus& g, const Formula& f, const SearchConfig& cfg) {
    Sequent goal;
    goal.right.insert(f);
    return prove(g, goal, cfg);
}

TransferReport theoremhood_transfer(const GentzenCalculus& combined_calc,
                                    const GentzenCalculus& host_calc, const Combination& comb,
                                    const Formula& f, const SearchConfig& cfg) {
    TransferReport rep;
    rep.combined = prove_theorem(combined_calc, f, cfg).verdict;
    rep.host = prove_theorem(host_calc, flatten(comb, f), cfg).verdict;
    rep.inconclusive =
        rep.combined == Verdict::DepthExhausted || rep.host == Verdict::DepthExhausted;
    rep.agree = !rep.inconclusive && rep.combined == rep.host;
    if (rep.inconclusive)
        rep.detail = "depth bound hit";
    else if (!rep.agree)
        rep.detail = std::string("combined ") + to_string(rep.combined) + " vs host " +
                     to_string(rep.host) + " for " + render(f);
    return rep;
}

}  // namespace logicfuse
