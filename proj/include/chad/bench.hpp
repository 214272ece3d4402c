#pragma once

#include <vector>

#include "chad/field.hpp"
#include "chad/parallel.hpp"

namespace chad {

/// Workload of one benchmark cell: a uniform field of N particles advanced
/// by exactly one outer step. Timing covers the kernel region only (no file
/// IO, no state setup).
struct BenchWorkload {
    ParamSet params = ParamSet::defaults();
    Operational op;                 // tank-level operating conditions
    AdmState initial;               // cloned to every particle
    SyncPolicy policy;              // outer step + substeps
    IntegratorConfig integrator;
};

BenchWorkload default_bench_workload();

/// Mean runtime over `repetitions` per (N, W) cell; one warm-up repetition
/// is discarded and the particle states are reset before every timed pass so
/// every repetition measures the identical computation.
BenchReport bench_scaling(const std::vector<std::size_t>& n_list, const std::vector<int>& w_list,
                          int repetitions, const BenchWorkload& workload);

} // namespace chad
