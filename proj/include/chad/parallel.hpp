#pragma once

#include <condition_variable>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "chad/errors.hpp"

namespace chad {

/// Contiguous equal chunks covering [0, n); sizes differ by at most one,
/// larger chunks first.
struct Partition {
    struct Range {
        std::size_t begin = 0, end = 0;
        std::size_t size() const { return end - begin; }
    };
    std::vector<Range> chunks;
    int worker_count = 1;
};

Partition partition(std::size_t n_items, int n_workers);

struct ItemError {
    std::size_t index;
    std::string message;
};

/// Raised after a parallel region when one or more items failed; carries
/// every failing index.
class AggregateItemError : public std::runtime_error {
public:
    explicit AggregateItemError(std::vector<ItemError> items);
    const std::vector<ItemError>& items() const noexcept { return items_; }

private:
    std::vector<ItemError> items_;
};

/// Fixed pool of W workers executing one chunked job at a time. Work items
/// are read-only inputs plus exclusively owned outputs, so results are
/// identical regardless of worker count; the only synchronization is the
/// per-job join barrier.
class WorkerPool {
public:
    using ChunkFn = std::function<void(std::size_t chunk, std::size_t begin, std::size_t end)>;

    explicit WorkerPool(int workers);
    ~WorkerPool();
    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    int size() const { return workers_; }

    /// Executes fn(chunk_index, begin, end) once per chunk of the partition;
    /// chunk i runs on worker i. A chunk-level exception aborts that chunk
    /// and is rethrown (first one wins) after the join barrier.
    void run_chunks(const Partition& part, const ChunkFn& fn);

    /// Equal-chunk partition of [0, n), fn invoked per item in index order
    /// within each chunk. Per-item failures are collected and rethrown as
    /// AggregateItemError after the join, smallest index first.
    template <class Fn>
    void run_indexed(std::size_t n, Fn&& fn) {
        const Partition part = partition(n, workers_);
        std::vector<std::vector<ItemError>> errors(part.chunks.size());
        run_chunks(part, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    errors[chunk].push_back({i, e.what()});
                }
            }
        });
        std::vector<ItemError> all;
        for (auto& v : errors)
            for (auto& e : v) all.push_back(std::move(e));
        if (!all.empty()) throw AggregateItemError(std::move(all));
    }

private:
    void worker_loop(int index);

    int workers_;
    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable cv_start_;
    std::condition_variable cv_done_;
    const Partition* job_part_ = nullptr;
    const ChunkFn* job_fn_ = nullptr;
    long generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
    std::string first_error_;
};

/// Mean/stddev runtime per (N, W) cell over R repetitions of a kernel-only
/// workload, plus speedup relative to that N's W = 1 cell (or the smallest
/// measured W when 1 was not part of the sweep).
struct BenchCell {
    std::size_t n_particles = 0;
    int workers = 0;
    double mean_runtime_s = 0;
    double stddev_s = 0;
    double speedup = 0;
};

struct BenchReport {
    int repetitions = 0;
    std::vector<BenchCell> cells;
};

void write_bench_csv(const BenchReport& report, const std::filesystem::path& path);

/// Coefficient of determination of the least-squares line through (x, y).
double linear_fit_r2(const std::vector<double>& x, const std::vector<double>& y);

} // namespace chad
