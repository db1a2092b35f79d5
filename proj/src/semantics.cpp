#include "logicfuse/semantics.hpp"

#include <algorithm>
#include <stdexcept>

#include "logicfuse/enumerate.hpp"

#ifdef LOGICFUSE_HAVE_OPENMP
#include <omp.h>
#endif

namespace logicfuse {

bool Matrix::is_designated(Value v) const {
    return std::find(designated.begin(), designated.end(), v) != designated.end();
}

const std::vector<Value>* MatrixSemantics::table(const Constructor& c) const {
    auto it = tables.find(c.token());
    return it == tables.end() ? nullptr : &it->second;
}

Value eval(const MatrixModel& m, const Formula& f) {
    switch (f.kind()) {
        case FKind::Prop: {
            auto it = m.valuation.find(f.prop_index());
            if (it == m.valuation.end())
                throw std::invalid_argument("no value for p" + std::to_string(f.prop_index()));
            return it->second;
        }
        case FKind::App: {
            const auto* table = m.sem->table(f.ctor());
            if (!table)
                throw std::invalid_argument("no truth table for " + f.ctor().token());
            const size_t n = m.sem->matrix.values.size();
            size_t slot = 0;
            for (const auto& k : f.children()) slot = slot * n + eval(m, k);
            return (*table)[slot];
        }
        default:
            throw std::invalid_argument("eval: formula is not ground");
    }
}

bool satisfies(const MatrixModel& m, const Formula& f) {
    return m.sem->matrix.is_designated(eval(m, f));
}

bool satisfies(const MatrixModel& m, const Multiset& left, const Multiset& right) {
    for (const auto& f : left.elems())
        if (!satisfies(m, f)) return true;
    for (const auto& f : right.elems())
        if (satisfies(m, f)) return true;
    return false;
}

std::vector<MatrixModel> all_models(const MatrixSemantics& sem,
                                    const std::vector<uint32_t>& vars) {
    const size_t n = sem.matrix.values.size();
    size_t count = 1;
    for (size_t i = 0; i < vars.size(); ++i) count *= n;
    std::vector<MatrixModel> out;
    out.reserve(count);
    for (size_t idx = 0; idx < count; ++idx) {
        MatrixModel m;
        m.sem = &sem;
        size_t rest = idx;
        for (size_t v = vars.size(); v-- > 0;) {
            m.valuation[vars[v]] = static_cast<Value>(rest % n);
            rest /= n;
        }
        out.push_back(std::move(m));
    }
    return out;
}

bool valid(const MatrixSemantics& sem, const Formula& f) {
    for (const auto& m : all_models(sem, prop_indices(f)))
        if (!satisfies(m, f)) return false;
    return true;
}

bool satisfies_combined(const MatrixModel& host_model, const Combination& comb, const Formula& f) {
    return satisfies(host_model, flatten(comb, f));
}

bool valid_combined(const MatrixSemantics& host_sem, const Combination& comb, const Formula& f) {
    return valid(host_sem, flatten(comb, f));
}

namespace {

std::string render_valuation(const MatrixSemantics& sem, const MatrixModel& m) {
    std::string out;
    for (const auto& [idx, v] : m.valuation) {
        if (!out.empty()) out += ", ";
        out += "p" + std::to_string(idx) + "=" + sem.matrix.values[v];
    }
    return out;
}

std::vector<AuditCounterexample> audit_one(const ConservativeTriple& triple, uint64_t index,
                                           const Formula& f,
                                           const std::vector<MatrixModel>& source_models,
                                           const std::vector<MatrixModel>& host_models) {
    std::vector<AuditCounterexample> out;
    const Formula image = translate(*triple.tau, f);
    for (const auto& m : source_models) {
        MatrixModel fwd = triple.forward(m);
        if (satisfies(fwd, image) && !satisfies(m, f))
            out.push_back({index, render(f), render_valuation(*triple.source_sem, m),
                           AuditCounterexample::Condition::Forward});
    }
    for (const auto& m : host_models) {
        MatrixModel bwd = triple.backward(m);
        if (satisfies(bwd, f) && !satisfies(m, image))
            out.push_back({index, render(f), render_valuation(*triple.host_sem, m),
                           AuditCounterexample::Condition::Backward});
    }
    return out;
}

}  // namespace

AuditReport check_conservative_translation(const ConservativeTriple& triple,
                                           const std::vector<uint32_t>& vars, int max_depth,
                                           Exec exec, size_t max_counterexamples) {
    FormulaSpace space(triple.tau->source, vars, max_depth);
    const auto source_models = all_models(*triple.source_sem, vars);
    const auto host_models = all_models(*triple.host_sem, vars);

    AuditReport report;
    report.formulas = space.total();
    report.checks = space.total() * (source_models.size() + host_models.size());

    const int64_t n = static_cast<int64_t>(space.total());
    std::vector<std::vector<AuditCounterexample>> found;

    if (exec == Exec::Parallel) {
#ifdef LOGICFUSE_HAVE_OPENMP
        int threads = 1;
#pragma omp parallel
        {
#pragma omp single
            threads = omp_get_num_threads();
        }
        found.resize(static_cast<size_t>(threads));
#pragma omp parallel for schedule(dynamic, 256)
        for (int64_t i = 0; i < n; ++i) {
            auto hits = audit_one(triple, static_cast<uint64_t>(i),
                                  space.at(static_cast<uint64_t>(i)), source_models, host_models);
            if (!hits.empty()) {
                auto& mine = found[static_cast<size_t>(omp_get_thread_num())];
                mine.insert(mine.end(), hits.begin(), hits.end());
            }
        }
#else
        exec = Exec::Serial;
#endif
    }
    if (exec == Exec::Serial) {
        found.resize(1);
        for (int64_t i = 0; i < n; ++i) {
            auto hits = audit_one(triple, static_cast<uint64_t>(i),
                                  space.at(static_cast<uint64_t>(i)), source_models, host_models);
            found[0].insert(found[0].end(), hits.begin(), hits.end());
        }
    }

    std::vector<AuditCounterexample> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](const AuditCounterexample& a, const AuditCounterexample& b) {
        if (a.formula_index != b.formula_index) return a.formula_index < b.formula_index;
        if (a.condition != b.condition) return a.condition < b.condition;
        return a.valuation < b.valuation;
    });
    if (all.size() > max_counterexamples) all.resize(max_counterexamples);
    report.counterexamples = std::move(all);
    return report;
}

}  // namespace logicfuse
