// Matrix semantics: truth values with a designated subset, per-constructor
// truth tables, homomorphic evaluation, brute-force validity and the model
// maps of a conservative translation.
//
// Values are indices into the matrix value list; tables are stored flat in
// row-major order with the first argument as the major axis.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "logicfuse/formula.hpp"
#include "logicfuse/sequent.hpp"
#include "logicfuse/support.hpp"
#include "logicfuse/translation.hpp"

namespace logicfuse {

using Value = uint8_t;

struct Matrix {
    std::vector<std::string> values;  // value names, e.g. {"0","1/2","1"}
    std::vector<Value> designated;    // indices into values

    bool is_designated(Value v) const;
};

struct MatrixSemantics {
    std::string name;
    Signature sig;
    Matrix matrix;
    // constructor token -> flat table of size |values|^arity
    std::map<std::string, std::vector<Value>> tables;

    const std::vector<Value>* table(const Constructor& c) const;
};

// A model fixes the valuation on finitely many prop indices; evaluation
// only ever consults symbols occurring in the formula.
struct MatrixModel {
    const MatrixSemantics* sem = nullptr;
    std::map<uint32_t, Value> valuation;
};

// Homomorphic evaluation; throws std::invalid_argument on a constructor
// without a table or a prop symbol without a value.
Value eval(const MatrixModel& m, const Formula& f);

bool satisfies(const MatrixModel& m, const Formula& f);

// Satisfaction for sequents: if every antecedent member is satisfied,
// some succedent member must be; an empty succedent is never satisfied
// under a satisfied antecedent.
bool satisfies(const MatrixModel& m, const Multiset& left, const Multiset& right);

// True iff f is satisfied under every valuation of the prop symbols
// occurring in it (|values|^#vars cases).
bool valid(const MatrixSemantics& sem, const Formula& f);

// Every valuation of the given vars, in lexicographic order.
std::vector<MatrixModel> all_models(const MatrixSemantics& sem,
                                    const std::vector<uint32_t>& vars);

// Combined-logic satisfaction: the host model satisfies a combined
// formula iff it satisfies its flattening.
bool satisfies_combined(const MatrixModel& host_model, const Combination& comb, const Formula& f);
bool valid_combined(const MatrixSemantics& host_sem, const Combination& comb, const Formula& f);

// A conservative translation triple: the syntactic translation plus the
// two model maps.
struct ConservativeTriple {
    const ConstructorTranslation* tau = nullptr;
    const MatrixSemantics* source_sem = nullptr;
    const MatrixSemantics* host_sem = nullptr;
    std::function<MatrixModel(const MatrixModel&)> forward;   // source model -> host model
    std::function<MatrixModel(const MatrixModel&)> backward;  // host model -> source model
};

struct AuditCounterexample {
    uint64_t formula_index = 0;
    std::string formula;
    std::string valuation;
    enum class Condition : uint8_t { Forward, Backward } condition = Condition::Forward;
};

struct AuditReport {
    uint64_t formulas = 0;
    uint64_t checks = 0;
    std::vector<AuditCounterexample> counterexamples;  // sorted by formula index, capped
    bool ok() const { return counterexamples.empty(); }
};

// Checks both defining conditions of a conservative translation over all
// source formulas up to the depth bound and all valuations of the given
// vars:
//   forward:  fwd(M'') satisfies tau(f)  implies  M'' satisfies f
//   backward: bwd(M') satisfies f        implies  M'  satisfies tau(f)
// Exec::Parallel runs the formula loop under OpenMP; reports are
// identical to the serial reference.
AuditReport check_conservative_translation(const ConservativeTriple& triple,
                                           const std::vector<uint32_t>& vars, int max_depth,
                                           Exec exec = Exec::Serial,
                                           size_t max_counterexamples = 16);

}  // namespace logicfuse
