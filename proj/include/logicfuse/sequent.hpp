// Sequents over multisets of formulas, rule schemas, Gentzen calculi,
// backward matching and derivation checking.
//
// Schema pattern language (element patterns are Formula trees that may
// contain variable leaves):
//   ?b            formula metavariable
//   @p            propositional-symbol variable (matches ambient symbols)
//   @p.pl         source-prop variable (matches surviving source symbols
//                 p<k>.pl; binds the same name as @p, so a premise @p
//                 refers to the symbol with the translated index)
//   $G            context variable (any sub-multiset)
//   box.s4[$G]    modal context variable: matches a multiset whose
//                 members all have the given outer constructor; binds the
//                 multiset of immediate subformulas
//
// Derivation lines are numbered from 1 (the goal); justifications cite
// premise lines that appear strictly later, as in backward-listed proofs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logicfuse/formula.hpp"

namespace logicfuse {

// Finite multiset kept canonically sorted; equality is multiplicity
// sensitive and order insensitive.
class Multiset {
  public:
    Multiset() = default;
    explicit Multiset(std::vector<Formula> elems);

    const std::vector<Formula>& elems() const { return elems_; }
    bool empty() const { return elems_.empty(); }
    size_t size() const { return elems_.size(); }

    void insert(const Formula& f);
    // Removes one occurrence; false when absent.
    bool erase_one(const Formula& f);
    bool contains(const Formula& f) const;

    Multiset merged(const Multiset& other) const;

    bool operator==(const Multiset& o) const;
    uint64_t hash() const;
    // Hash of the underlying set (multiplicities collapsed).
    uint64_t set_hash(uint64_t salt) const;

    std::string render() const;

  private:
    std::vector<Formula> elems_;
};

struct Sequent {
    Multiset left, right;

    bool operator==(const Sequent& o) const { return left == o.left && right == o.right; }
    uint64_t hash() const;
    std::string render() const;
};

enum class SuccedentMode : uint8_t { Single, Multi };

struct ContextVar {
    std::string name;
    std::optional<Constructor> modal;  // outer constructor for modal contexts
    bool operator==(const ContextVar&) const = default;
};

struct SidePattern {
    std::vector<Formula> elems;  // patterns
    std::vector<ContextVar> ctxs;
};

struct SequentPattern {
    SidePattern left, right;
    std::string render() const;
};

enum class RuleKind : uint8_t {
    Axiom,         // p, G => D, p
    AxiomC1,       // c1(p), G => D, c1(p)
    AxiomToC1,     // G => D, p, c1(p)
    AxiomBot,      // bot, G => D
    Left,          // c(b1..bn), G => D  from premises
    Right,
    LeftTwo,       // c1(c(b1..bn)), G => D
    RightTwo,
    PropTransLeft,   // p'', G => D  from  tau(p''), G => D
    PropTransRight,
};

bool is_axiom_kind(RuleKind k);

struct RuleSchema {
    std::string name;
    RuleKind kind = RuleKind::Axiom;
    std::vector<SequentPattern> premises;  // empty for axioms
    SequentPattern conclusion;

    // Principal constructor(s); unset for Axiom/AxiomBot/prop rules.
    std::optional<Constructor> principal;   // c
    std::optional<Constructor> principal1;  // c1 for two-constructor rules
    LogicTag source_tag;                    // prop-translation rules

    bool is_axiom() const { return is_axiom_kind(kind); }
    // True when some conclusion context variable is dropped from every
    // premise (the built-in-weakening modal rules).
    bool erases_context() const;
    // Canonical shape string: variables renamed in first-occurrence
    // order, so structural identity is rule-name independent.
    std::string shape() const;
};

class GentzenCalculus {
  public:
    GentzenCalculus() = default;
    // Validates: unique names, well-formed patterns over sig, the
    // AxiomC1/AxiomToC1 pairing, and the absence of plain rules for a
    // constructor that appears as c1 of a two-constructor rule.
    GentzenCalculus(std::string name, Signature sig, SuccedentMode mode,
                    std::vector<RuleSchema> schemas);

    const std::string& name() const { return name_; }
    const Signature& signature() const { return sig_; }
    SuccedentMode mode() const { return mode_; }
    const std::vector<RuleSchema>& schemas() const { return schemas_; }
    const RuleSchema* find(std::string_view rule_name) const;

  private:
    std::string name_;
    Signature sig_;
    SuccedentMode mode_ = SuccedentMode::Multi;
    std::vector<RuleSchema> schemas_;
};

// All ways the schema's conclusion matches the goal: one premise list per
// match, deterministically ordered, duplicates collapsed. Axioms yield a
// single empty premise list when they match.
std::vector<std::vector<Sequent>> match_backward(const RuleSchema& schema, const Sequent& goal);

struct Derivation {
    struct Line {
        Sequent sequent;
        std::string rule;
        std::vector<int> premises;  // 1-based line numbers
    };
    std::vector<Line> lines;

    std::string render() const;
};

struct CheckDiagnostic {
    int line = 0;  // 1-based
    std::string reason;
};

// nullopt = derivation checks.
std::optional<CheckDiagnostic> check_derivation(const GentzenCalculus& g, const Derivation& d);

struct SelfContainment {
    struct Item {
        std::string rule;
        bool ok;
        std::string detail;
    };
    bool ok = true;
    std::vector<Item> per_rule;
};

// Checks the constructor rules: every premise element must be a bare
// principal metavariable, a copy of the principal pattern, a 0-ary
// constant, or (two-constructor rules) c1 applied to a principal
// metavariable; premise context variables must come from the conclusion.
SelfContainment is_strictly_self_contained(const GentzenCalculus& g);

struct CalculusDiff {
    std::vector<std::string> missing;     // in transcription only
    std::vector<std::string> extra;       // in generated only
    std::vector<std::string> mismatched;  // signature/mode level problems
    bool ok() const { return missing.empty() && extra.empty() && mismatched.empty(); }
    std::string render() const;
};

// Structural comparison modulo rule naming and schema order.
CalculusDiff diff_calculi(const GentzenCalculus& generated, const GentzenCalculus& transcription);

}  // namespace logicfuse
