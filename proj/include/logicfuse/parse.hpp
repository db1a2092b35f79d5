// Text forms: formulas, sequents, sequent patterns, derivation files.
//
// Canonical formula form is prefix: (<ctor> <arg>*) with 0-ary
// constructors and prop symbols written bare ("bot", "p1", "p1.pl").
// Accepted sugar: right-associative "-><tag>" (implication, lowest
// precedence), "|<tag>" (disjunction), "&<tag>" (conjunction), and prefix
// unary constructors ("neg", "neg.it", "box", "sim", ...). An untagged
// operator resolves only when the ambient signature has exactly one
// constructor with that base.
//
// Sequent separator is "=>"; multiset elements are comma-separated and an
// empty side is written as nothing.
//
// Derivation files carry one line per step:
//   N. <left> => <right> ; <rule-name> <premise line numbers>

#pragma once

#include <string_view>

#include "logicfuse/formula.hpp"
#include "logicfuse/sequent.hpp"
#include "logicfuse/support.hpp"

namespace logicfuse {

struct ParseOptions {
    bool patterns = false;  // allow ?x / @x / @x.tag / $X leaves
};

Result<Formula> parse_formula(std::string_view text, const Signature& sig,
                              const ParseOptions& opts = {});

Result<Sequent> parse_sequent(std::string_view text, const Signature& sig);

Result<SequentPattern> parse_sequent_pattern(std::string_view text, const Signature& sig);

Result<Derivation> parse_derivation(std::string_view text, const Signature& sig);

}  // namespace logicfuse
