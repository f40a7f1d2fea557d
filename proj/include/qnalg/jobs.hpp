#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qnalg {

inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Runs fn(0..count-1) across up to `jobs` threads. Results must be written
/// into caller-owned per-index slots, which keeps aggregation order
/// deterministic. The lowest-index exception is rethrown after all workers
/// finish.
inline void run_indexed_jobs(unsigned jobs, std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (jobs == 0) jobs = 1;
    if (jobs > count) jobs = static_cast<unsigned>(count);
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace qnalg
