// Deterministic enumeration of all formulas over a signature up to a
// constructor-nesting depth bound, with random access by index.
//
// Order: depth-0 atoms first (the given prop symbols in order, the 0-ary
// constructors in declaration order, then one source-prop constant per
// declared family and prop symbol); after that the exact-depth strata in
// increasing depth. Within a stratum, constructor blocks follow
// declaration order and argument tuples are ordered lexicographically by
// child index. The layout makes enumerations downward closed: the
// enumeration to depth d is a prefix of the one to depth d+1.

#pragma once

#include <cstdint>
#include <vector>

#include "logicfuse/formula.hpp"

namespace logicfuse {

class FormulaSpace {
  public:
    // Throws std::overflow_error when the space size exceeds uint64 and
    // std::invalid_argument on an empty atom set.
    FormulaSpace(Signature sig, std::vector<uint32_t> vars, int max_depth);

    const Signature& signature() const { return sig_; }
    const std::vector<uint32_t>& vars() const { return vars_; }
    int max_depth() const { return max_depth_; }

    uint64_t total() const { return counts_.back(); }
    uint64_t count_at_most(int depth) const;  // formulas of depth <= depth

    Formula at(uint64_t index) const;

  private:
    Formula decode(uint64_t index, int depth) const;

    Signature sig_;
    std::vector<uint32_t> vars_;
    int max_depth_;
    std::vector<Formula> atoms_;
    std::vector<const Constructor*> ctors_;  // arity >= 1, declaration order
    std::vector<uint64_t> counts_;           // counts_[d] = #formulas of depth <= d
};

// Materialized enumeration; guards against spaces over the given cap.
std::vector<Formula> enumerate_formulas(const Signature& sig, const std::vector<uint32_t>& vars,
                                        int max_depth, uint64_t cap = 2'000'000);

// n distinct uniform indices into the space, reproducible from the seed
// (own rejection sampling on top of mt19937_64, so results do not depend
// on the standard library).
std::vector<uint64_t> sample_indices(const FormulaSpace& space, size_t n, uint64_t seed);

}  // namespace logicfuse
