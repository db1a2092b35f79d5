// Corpus sweep kernels. These are the data-parallel inner loops of the
// project: each kernel has a serial reference path and an OpenMP path
// selected by Exec, with bit-identical reports. The benchmark tool
// compares the two.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "logicfuse/enumerate.hpp"
#include "logicfuse/support.hpp"

namespace logicfuse {

struct SweepReport {
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::vector<uint64_t> failure_indices;  // sorted, capped
    bool ok() const { return failures == 0; }
};

// Evaluates the predicate on every formula of the space (or on the given
// index subset); a false result is a failure.
SweepReport sweep_all(const FormulaSpace& space,
                      const std::function<bool(uint64_t, const Formula&)>& pred,
                      Exec exec = Exec::Serial, size_t max_failures = 16);

SweepReport sweep_indices(const FormulaSpace& space, const std::vector<uint64_t>& indices,
                          const std::function<bool(uint64_t, const Formula&)>& pred,
                          Exec exec = Exec::Serial, size_t max_failures = 16);

struct InjectivityReport {
    uint64_t checked = 0;
    // Index pairs with equal images; empty means the map is injective on
    // the corpus.
    std::vector<std::pair<uint64_t, uint64_t>> collisions;
    bool ok() const { return collisions.empty(); }
};

// Checks injectivity of an image map over the whole space: image hashes
// are computed in bulk (no image trees are materialized), sorted, and
// equal-hash runs are confirmed against the exact images.
InjectivityReport injectivity_sweep(const FormulaSpace& space,
                                    const std::function<uint64_t(const Formula&)>& image_hash,
                                    const std::function<Formula(const Formula&)>& image,
                                    Exec exec = Exec::Serial, size_t max_collisions = 16);

}  // namespace logicfuse
