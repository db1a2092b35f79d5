// Times the serial reference kernels against the OpenMP ones on the
// enumeration workloads and checks that both produce the same result.

#include <chrono>
#include <cstdio>
#include <string>

#include "logicfuse/audit.hpp"
#include "logicfuse/instances.hpp"
#include "logicfuse/search.hpp"
#include "logicfuse/semantics.hpp"

using namespace logicfuse;

namespace {

double seconds(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, uint64_t items, double serial, double parallel, bool same) {
    std::printf("%-34s %12llu %10.3fs %10.3fs %7.2fx  %s\n", name,
                static_cast<unsigned long long>(items), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "outputs match" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int depth = 3;
    if (argc > 1) depth = std::atoi(argv[1]);
    std::printf("%-34s %12s %11s %11s %8s\n", "kernel", "items", "serial", "openmp", "speedup");

    {
        const auto& tb = builtin_translation("godel");
        FormulaSpace space(tb.comb.renamed.source, {1, 2}, depth);
        auto hash = [&](const Formula& f) { return translate_hash(tb.comb.renamed, f); };
        auto image = [&](const Formula& f) { return translate(tb.comb.renamed, f); };
        InjectivityReport rs, rp;
        double ts = seconds([&] { rs = injectivity_sweep(space, hash, image, Exec::Serial); });
        double tp = seconds([&] { rp = injectivity_sweep(space, hash, image, Exec::Parallel); });
        row("translation injectivity (PL->It)", space.total(), ts, tp,
            rs.collisions == rp.collisions && rs.checked == rp.checked);
    }

    {
        ConservativeTriple triple = pl_to_j3_triple();
        AuditReport rs, rp;
        double ts = seconds(
            [&] { rs = check_conservative_translation(triple, {1, 2}, depth, Exec::Serial); });
        double tp = seconds(
            [&] { rp = check_conservative_translation(triple, {1, 2}, depth, Exec::Parallel); });
        row("conservative-translation audit", rs.formulas, ts, tp,
            rs.checks == rp.checks &&
                rs.counterexamples.size() == rp.counterexamples.size());
    }

    {
        const auto& cb = builtin_combination("CJ");
        FormulaSpace space(cb.comb.combined, {1}, depth);
        SearchConfig cfg;
        cfg.max_depth = 30;
        auto pred = [&](uint64_t, const Formula& f) {
            SearchOutcome o = prove_theorem(cb.generated, f, cfg);
            if (o.verdict == Verdict::DepthExhausted) return true;
            return (o.verdict == Verdict::Proved) ==
                   valid(*cb.host->semantics, flatten(cb.comb, f));
        };
        SweepReport rs, rp;
        double ts = seconds([&] { rs = sweep_all(space, pred, Exec::Serial); });
        double tp = seconds([&] { rp = sweep_all(space, pred, Exec::Parallel); });
        row("CJ search vs truth tables", space.total(), ts, tp,
            rs.failures == rp.failures && rs.failure_indices == rp.failure_indices);
    }

    return 0;
}
