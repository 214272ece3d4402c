#include "chad/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace chad {

Partition partition(std::size_t n_items, int n_workers) {
    if (n_workers < 1) throw ConfigError("partition: worker count must be >= 1");
    Partition p;
    p.worker_count = n_workers;
    if (n_items == 0) return p;

    const auto w = static_cast<std::size_t>(n_workers);
    const std::size_t chunks = std::min(n_items, w);
    const std::size_t base = n_items / chunks;
    const std::size_t rem = n_items % chunks; // first `rem` chunks get one extra
    std::size_t begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t size = base + (c < rem ? 1 : 0);
        p.chunks.push_back({begin, begin + size});
        begin += size;
    }
    return p;
}

namespace {
std::string aggregate_message(const std::vector<ItemError>& items) {
    std::string m = std::to_string(items.size()) + " item(s) failed; first: index " +
                    std::to_string(items.front().index) + ": " + items.front().message;
    return m;
}
} // namespace

AggregateItemError::AggregateItemError(std::vector<ItemError> items)
    : std::runtime_error(aggregate_message(items)), items_(std::move(items)) {
    std::sort(items_.begin(), items_.end(),
              [](const ItemError& a, const ItemError& b) { return a.index < b.index; });
}

WorkerPool::WorkerPool(int workers) : workers_(workers) {
    if (workers < 1) throw ConfigError("WorkerPool: worker count must be >= 1");
    threads_.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i)
        threads_.emplace_back([this, i] { worker_loop(i); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard<std::mutex> lk(mutex_);
        stop_ = true;
    }
    cv_start_.notify_all();
    for (auto& t : threads_) t.join();
}

void WorkerPool::run_chunks(const Partition& part, const ChunkFn& fn) {
    if (part.chunks.empty()) return;
    if (part.chunks.size() > static_cast<std::size_t>(workers_))
        throw ConfigError("WorkerPool: partition has more chunks than workers");
    {
        std::lock_guard<std::mutex> lk(mutex_);
        job_part_ = &part;
        job_fn_ = &fn;
        pending_ = static_cast<int>(part.chunks.size());
        first_error_.clear();
        ++generation_;
    }
    cv_start_.notify_all();
    {
        std::unique_lock<std::mutex> lk(mutex_);
        cv_done_.wait(lk, [this] { return pending_ == 0; });
        job_part_ = nullptr;
        job_fn_ = nullptr;
        if (!first_error_.empty()) throw SolverError("parallel chunk failed: " + first_error_);
    }
}

void WorkerPool::worker_loop(int index) {
    long seen_generation = 0;
    for (;;) {
        const Partition* part = nullptr;
        const ChunkFn* fn = nullptr;
        {
            std::unique_lock<std::mutex> lk(mutex_);
            cv_start_.wait(lk, [&] { return stop_ || generation_ != seen_generation; });
            if (stop_) return;
            seen_generation = generation_;
            part = job_part_;
            fn = job_fn_;
        }
        const auto chunk = static_cast<std::size_t>(index);
        std::string error;
        if (part && chunk < part->chunks.size()) {
            const auto& r = part->chunks[chunk];
            try {
                (*fn)(chunk, r.begin, r.end);
            } catch (const std::exception& e) {
                error = e.what();
            } catch (...) {
                error = "unknown exception";
            }
        } else {
            // idle worker for this job; still participates in the barrier
        }
        {
            std::lock_guard<std::mutex> lk(mutex_);
            if (!error.empty() && first_error_.empty()) first_error_ = error;
            if (part && chunk < part->chunks.size()) --pending_;
        }
        cv_done_.notify_one();
    }
}

void write_bench_csv(const BenchReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "n_particles,workers,mean_runtime_s,stddev_s,speedup\n";
    char buf[128];
    for (const BenchCell& c : report.cells) {
        std::snprintf(buf, sizeof(buf), "%zu,%d,%.17g,%.17g,%.17g\n", c.n_particles, c.workers,
                      c.mean_runtime_s, c.stddev_s, c.speedup);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("linear_fit_r2: need at least two points");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw ConfigError("linear_fit_r2: degenerate x values");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double fit = slope * x[i] + intercept;
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    if (ss_tot == 0.0) return 1.0;
    return 1.0 - ss_res / ss_tot;
}

} // namespace chad
