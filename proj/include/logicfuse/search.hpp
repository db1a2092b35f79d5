// Backward proof search over a Gentzen calculus with depth bounding and
// ancestor loop checking.
//
// Loop check: a subgoal is pruned when its sequent, with both multisets
// reduced to sets, already occurred strictly below on the same branch.
// Pruned branches count as closed-by-exhaustion, never as depth cuts, so
// NotProvable is only reported when the whole search space was exhausted.
// DepthExhausted is a distinct verdict and is never presented as
// non-theoremhood.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "logicfuse/sequent.hpp"
#include "logicfuse/translation.hpp"

namespace logicfuse {

struct SearchConfig {
    int max_depth = 50;
    bool loop_check = true;
    // Rule names in application order; empty selects the default order:
    // axioms, non-branching rules, branching rules, context-erasing rules
    // (calculus declaration order within each class).
    std::vector<std::string> rule_order;
    std::ostream* trace = nullptr;  // one line per expansion
};

enum class Verdict : uint8_t { Proved, NotProvable, DepthExhausted };

const char* to_string(Verdict v);

struct SearchOutcome {
    Verdict verdict = Verdict::NotProvable;
    std::optional<Derivation> derivation;  // set iff Proved; checks by construction
    uint64_t expansions = 0;
};

SearchOutcome prove(const GentzenCalculus& g, const Sequent& goal, const SearchConfig& cfg = {});

// Convenience: proves the theoremhood sequent "=> formula".
SearchOutcome prove_theorem(const GentzenCalculus& g, const Formula& f,
                            const SearchConfig& cfg = {});

struct TransferReport {
    Verdict combined = Verdict::NotProvable;
    Verdict host = Verdict::NotProvable;
    bool inconclusive = false;  // some side hit the depth bound
    bool agree = false;         // both conclusive with equal verdicts
    std::string detail;
};

// Proves the formula in the combined calculus and its flattening in the
// host calculus and reports whether the verdicts agree.
TransferReport theoremhood_transfer(const GentzenCalculus& combined_calc,
                                    const GentzenCalculus& host_calc, const Combination& comb,
                                    const Formula& f, const SearchConfig& cfg = {});

}  // namespace logicfuse
