#include "chad/bench.hpp"

#include <chrono>
#include <cmath>

namespace chad {

BenchWorkload default_bench_workload() {
    BenchWorkload w;
    w.op = Operational{3400.0, 300.0, 308.5, 1.013};
    w.initial = default_initial_state();
    w.policy = SyncPolicy{0.5, 10};
    return w;
}

BenchReport bench_scaling(const std::vector<std::size_t>& n_list, const std::vector<int>& w_list,
                          int repetitions, const BenchWorkload& workload) {
    if (n_list.empty() || w_list.empty())
        throw ConfigError("bench_scaling: sweep lists must be non-empty");
    if (repetitions < 1) throw ConfigError("bench_scaling: repetitions must be >= 1");
    workload.policy.validate();

    const AdmParams params = AdmParams::make(workload.params, workload.op);

    AdmState seed = workload.initial;
    {
        ReactorContext ctx;
        ctx.params = &params;
        ctx.inflow = &seed;
        ctx.mode = workload.integrator.mode;
        ctx.newton = workload.integrator.newton;
        make_consistent(seed, ctx);
    }

    BenchReport report;
    report.repetitions = repetitions;

    for (std::size_t n : n_list) {
        if (n == 0) throw ConfigError("bench_scaling: particle count must be > 0");
        const std::vector<AdmState> pristine(n, seed);
        std::vector<AdmState> states;

        for (int w : w_list) {
            WorkerPool pool(w);
            const Partition part = partition(n, w);

            auto run_once = [&]() {
                const auto t0 = std::chrono::steady_clock::now();
                pool.run_chunks(part, [&](std::size_t, std::size_t begin, std::size_t end) {
                    advance_states_kernel(states, begin, end, params, workload.policy,
                                          workload.integrator, nullptr);
                });
                const auto t1 = std::chrono::steady_clock::now();
                return std::chrono::duration<double>(t1 - t0).count();
            };

            states = pristine; // warm-up pass, discarded
            run_once();

            double sum = 0.0, sum_sq = 0.0;
            for (int rep = 0; rep < repetitions; ++rep) {
                states = pristine;
                const double dt = run_once();
                sum += dt;
                sum_sq += dt * dt;
            }
            const double mean = sum / repetitions;
            const double var =
                repetitions > 1 ? std::max(0.0, (sum_sq - sum * sum / repetitions) /
                                                    (repetitions - 1))
                                : 0.0;

            BenchCell cell;
            cell.n_particles = n;
            cell.workers = w;
            cell.mean_runtime_s = mean;
            cell.stddev_s = std::sqrt(var);
            report.cells.push_back(cell);
        }

        // Speedup is relative to this N's W = 1 cell when measured,
        // otherwise to the smallest W of the sweep.
        double ref = 0.0;
        int ref_w = 0;
        for (const BenchCell& c : report.cells) {
            if (c.n_particles != n) continue;
            if (c.workers == 1 || ref_w == 0 || c.workers < ref_w) {
                ref = c.mean_runtime_s;
                ref_w = c.workers;
                if (c.workers == 1) break;
            }
        }
        for (BenchCell& c : report.cells)
            if (c.n_particles == n && c.mean_runtime_s > 0.0) c.speedup = ref / c.mean_runtime_s;
    }
    return report;
}

} // namespace chad
