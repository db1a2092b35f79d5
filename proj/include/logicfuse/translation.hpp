// Constructor translations between two logics, the induced formula
// translation, identification of common constructors, combined-signature
// construction and the flattening map into the host language.
//
// A translation carries one map-term image per source constructor plus a
// single prop template: the image of p<k> is the template with its hole
// replaced by the host symbol the index bijection assigns to k. Validity
// (checked by validate_translation):
//   1. images are pairwise distinct and the prop scheme is injective,
//   2. image arity equals constructor arity,
//   3. the prop template takes no arguments,
//   4. every 0-ary constructor maps to a lifted 0-ary host constructor,
//   5. the hole occurs in the prop template.

#pragma once

#include <string>
#include <vector>

#include "logicfuse/formula.hpp"
#include "logicfuse/map_algebra.hpp"
#include "logicfuse/support.hpp"

namespace logicfuse {

// Index bijection between prop families. Every built-in translation uses
// the identity; the type exists so the scheme stays explicit.
struct IndexBijection {
    uint32_t operator()(uint32_t k) const { return k; }
};

struct ConstructorTranslation {
    std::string name;
    Signature source;
    Signature host;
    std::vector<std::pair<Constructor, MapTerm>> ctor_map;  // declaration order
    MapTerm prop_template;  // contains the hole
    IndexBijection prop_bijection;

    const MapTerm* image_of(const Constructor& c) const;
    // Template instantiated at the image of prop index k.
    MapTerm prop_image(uint32_t k) const;
    // True when the prop families are identified (bare-hole template).
    bool props_shared() const;
};

struct Violation {
    int condition = 0;  // 1..5 as listed above
    std::string message;
};

std::vector<Violation> validate_translation(const ConstructorTranslation& t);

// Homomorphic extension of the constructor translation to formulas over
// the source signature. Throws std::invalid_argument on symbols outside
// it.
Formula translate(const ConstructorTranslation& t, const Formula& source_formula);

// Result of identifying the common constructors: renamed component
// signatures, the rewritten translation over them, and the combined
// signature (host props; union constructors; surviving source props as a
// 0-ary family).
struct Combination {
    std::string name;
    ConstructorTranslation renamed;
    Signature combined;
    std::vector<std::pair<Constructor, Constructor>> identified;  // (source, host) originals
    bool props_identified = false;
};

Result<Combination> identify_common(const ConstructorTranslation& t, std::string combined_name);

// The flattening map: identity on host material, image expansion on
// source-only constructors and surviving source prop symbols.
Formula flatten(const Combination& comb, const Formula& combined_formula);

// Formula::hash of flatten(comb, f) / translate(t, f) without building
// the image tree; used by the corpus sweep kernels.
uint64_t flatten_hash(const Combination& comb, const Formula& combined_formula);
uint64_t translate_hash(const ConstructorTranslation& t, const Formula& source_formula);

}  // namespace logicfuse
