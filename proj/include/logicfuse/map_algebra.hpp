// The algebra of maps over a signature: lifted constructors and
// propositional symbols, projections, aggregation and composition.
// Terms are validated at construction, so applying a well-formed term can
// only fail on an argument-count mismatch.
//
// Width vs arity: a term denotes a map F^arity -> F^width. Aggregations
// are the only terms of width > 1 and are legal only as the inner part of
// a composition; applying one as a formula-valued map is an error.
//
// Textual form (used in logic-definition files):
//   lift:<ctor>   prop:<p>   proj:<n>:<i>   agg(m1, ..., mk)
//   comp(outer, inner)   _            (the prop-template hole)

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "logicfuse/formula.hpp"
#include "logicfuse/support.hpp"

namespace logicfuse {

class MapTerm {
  public:
    enum class Kind : uint8_t { Lift, PropConst, Hole, Proj, Agg, Comp };

    MapTerm() = default;

    static MapTerm lift(Constructor c);
    static MapTerm prop_const(uint32_t index);
    static MapTerm hole();
    static MapTerm proj(int n, int i);  // requires 1 <= i <= n
    static MapTerm agg(std::vector<MapTerm> children);   // children of equal arity
    static MapTerm comp(MapTerm outer, MapTerm inner);   // arity(outer) == width(inner)

    bool empty() const { return node_ == nullptr; }
    Kind kind() const;
    int arity() const;
    int width() const;

    const Constructor& lifted() const;            // Lift
    uint32_t prop_index() const;                  // PropConst
    int proj_n() const;                           // Proj
    int proj_i() const;                           // Proj
    const std::vector<MapTerm>& agg_children() const;  // Agg
    const MapTerm& comp_outer() const;            // Comp
    const MapTerm& comp_inner() const;            // Comp

    bool operator==(const MapTerm& o) const;
    bool operator!=(const MapTerm& o) const { return !(*this == o); }

  private:
    struct Node;
    explicit MapTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Evaluates m as a formula-valued map. args may contain pattern leaves
// (rule-schema generation instantiates schemas symbolically). Throws
// std::invalid_argument on argument-count mismatch, on terms containing
// holes, and on tuple-valued (top-level aggregation) terms.
Formula apply_term(const MapTerm& m, std::span<const Formula> args);

inline Formula apply_term(const MapTerm& m, const std::vector<Formula>& args) {
    return apply_term(m, std::span<const Formula>(args));
}
inline Formula apply_term(const MapTerm& m, std::initializer_list<Formula> args) {
    return apply_term(m, std::span<const Formula>(args.begin(), args.size()));
}

bool contains_hole(const MapTerm& m);

// Replaces every hole by the given propositional symbol.
MapTerm substitute_hole(const MapTerm& m, uint32_t prop_index);

// apply_term() with holes evaluating to the given formula; lets rule-schema
// generation instantiate the prop template at a pattern variable.
Formula apply_term_with_hole(const MapTerm& m, std::span<const Formula> args,
                        const Formula& hole_value);

// Hash of apply_term(m, args) computed without materializing the image; args
// are given by the hashes of already-evaluated argument formulas. Agrees
// exactly with Formula::hash of the materialized image.
uint64_t apply_term_hash(const MapTerm& m, std::span<const uint64_t> arg_hashes);

std::string render_map_term(const MapTerm& m);
Result<MapTerm> parse_map_term(std::string_view text, const Signature& host);

// Constructors mentioned in lift leaves, in first-occurrence order.
std::vector<Constructor> lifted_constructors(const MapTerm& m);

}  // namespace logicfuse
