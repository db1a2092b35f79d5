#include "logicfuse/audit.hpp"

#include <algorithm>

#ifdef LOGICFUSE_HAVE_OPENMP
#include <omp.h>
#endif

namespace logicfuse {

namespace {

SweepReport run_sweep(const FormulaSpace& space, const std::vector<uint64_t>* indices,
                      uint64_t count, const std::function<bool(uint64_t, const Formula&)>& pred,
                      Exec exec, size_t max_failures) {
    SweepReport report;
    report.checked = count;
    std::vector<std::vector<uint64_t>> fails(1);

    auto body = [&](uint64_t i, std::vector<uint64_t>& sink) {
        const uint64_t idx = indices ? (*indices)[static_cast<size_t>(i)] : i;
        if (!pred(idx, space.at(idx))) sink.push_back(idx);
    };

    bool parallel = exec == Exec::Parallel;
#ifndef LOGICFUSE_HAVE_OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef LOGICFUSE_HAVE_OPENMP
        int threads = 1;
#pragma omp parallel
        {
#pragma omp single
            threads = omp_get_num_threads();
        }
        fails.assign(static_cast<size_t>(threads), {});
#pragma omp parallel for schedule(dynamic, 512)
        for (int64_t i = 0; i < static_cast<int64_t>(count); ++i)
            body(static_cast<uint64_t>(i), fails[static_cast<size_t>(omp_get_thread_num())]);
#endif
    } else {
        for (uint64_t i = 0; i < count; ++i) body(i, fails[0]);
    }

    std::vector<uint64_t> all;
    for (auto& part : fails) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    report.failures = all.size();
    if (all.size() > max_failures) all.resize(max_failures);
    report.failure_indices = std::move(all);
    return report;
}

}  // namespace

SweepReport sweep_all(const FormulaSpace& space,
                      const std::function<bool(uint64_t, const Formula&)>& pred, Exec exec,
                      size_t max_failures) {
    return run_sweep(space, nullptr, space.total(), pred, exec, max_failures);
}

SweepReport sweep_indices(const FormulaSpace& space, const std::vector<uint64_t>& indices,
                          const std::function<bool(uint64_t, const Formula&)>& pred, Exec exec,
                          size_t max_failures) {
    return run_sweep(space, &indices, indices.size(), pred, exec, max_failures);
}

InjectivityReport injectivity_sweep(const FormulaSpace& space,
                                    const std::function<uint64_t(const Formula&)>& image_hash,
                                    const std::function<Formula(const Formula&)>& image, Exec exec,
                                    size_t max_collisions) {
    InjectivityReport report;
    const uint64_t n = space.total();
    report.checked = n;

    struct Entry {
        uint64_t hash;
        uint64_t index;
    };
    std::vector<Entry> entries(static_cast<size_t>(n));

    bool parallel = exec == Exec::Parallel;
#ifndef LOGICFUSE_HAVE_OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef LOGICFUSE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1024)
        for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
            const uint64_t u = static_cast<uint64_t>(i);
            entries[static_cast<size_t>(i)] = {image_hash(space.at(u)), u};
        }
#endif
    } else {
        for (uint64_t i = 0; i < n; ++i) entries[static_cast<size_t>(i)] = {image_hash(space.at(i)), i};
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.hash != b.hash ? a.hash < b.hash : a.index < b.index;
    });

    // Equal-hash runs are short; confirm them exactly.
    std::vector<std::pair<uint64_t, uint64_t>> collisions;
    for (size_t i = 0; i < entries.size();) {
        size_t j = i + 1;
        while (j < entries.size() && entries[j].hash == entries[i].hash) ++j;
        if (j - i > 1) {
            for (size_t a = i; a < j; ++a) {
                for (size_t b = a + 1; b < j; ++b) {
                    Formula ia = image(space.at(entries[a].index));
                    Formula ib = image(space.at(entries[b].index));
                    if (ia == ib)
                        collisions.emplace_back(entries[a].index, entries[b].index);
                }
            }
        }
        i = j;
    }
    std::sort(collisions.begin(), collisions.end());
    if (collisions.size() > max_collisions) collisions.resize(max_collisions);
    report.collisions = std::move(collisions);
    return report;
}

}  // namespace logicfuse
