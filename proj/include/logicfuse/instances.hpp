// Built-in logics, translations and the three combined calculi, with the
// transcribed calculi loaded from the embedded data files and checked
// against the generated ones.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logicfuse/semantics.hpp"
#include "logicfuse/sequent.hpp"
#include "logicfuse/translation.hpp"

namespace logicfuse {

struct LogicBundle {
    std::string name;
    std::string doc;
    Signature sig;
    std::optional<GentzenCalculus> calculus;
    std::optional<MatrixSemantics> semantics;
};

struct CombinationBundle {
    std::string name;
    std::string doc;
    const LogicBundle* source = nullptr;
    const LogicBundle* host = nullptr;
    Combination comb;                // identified translation + combined signature
    GentzenCalculus generated;       // combine_calculus output
    GentzenCalculus transcription;   // data-file version
};

struct TranslationBundle {
    std::string name;                  // godel, godel-gentzen, gmt, pl-j3
    ConstructorTranslation original;   // over the fully tagged signatures
    Combination comb;                  // after identification
};

// Lookup by name; nullptr when unknown. Logic names: PL, PLfrag, It, S4,
// J3, PLJ, JS, CJ (combined bundles appear as logic bundles too, carrying
// the generated calculus).
const LogicBundle* find_builtin(std::string_view name);
const LogicBundle& builtin(std::string_view name);  // throws on unknown name

const CombinationBundle* find_builtin_combination(std::string_view name);  // PLJ, JS, CJ
const CombinationBundle& builtin_combination(std::string_view name);

const TranslationBundle* find_builtin_translation(std::string_view name);
const TranslationBundle& builtin_translation(std::string_view name);
// Resolves a source/host pair ("PL"/"It", "It"/"S4", "PL"/"J3"); the
// optional name picks between variants over the same pair.
const TranslationBundle* find_translation_between(std::string_view from, std::string_view to,
                                                  std::string_view name = {});

std::vector<std::string> builtin_names();
std::vector<std::string> builtin_combination_names();
std::vector<std::string> builtin_translation_names();

// Structural comparison of the generated calculus against the
// transcription.
CalculusDiff crosscheck(const CombinationBundle& cb);

// The conservative-translation triple for PL -> J3 (matrix semantics on
// both sides, valuation-preserving model maps).
ConservativeTriple pl_to_j3_triple();

}  // namespace logicfuse
