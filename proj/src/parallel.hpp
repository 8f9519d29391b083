#pragma once
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace knotconc::detail {

// Split [0, count) into at most `jobs` contiguous chunks and run them on
// worker threads. Exceptions are collected and the first one rethrown.
inline void parallel_chunks(long long count, int jobs,
                            const std::function<void(long long, long long)>& fn) {
    if (count <= 0) return;
    long long nthreads = std::max(1, jobs);
    if (nthreads > count) nthreads = count;
    if (nthreads == 1) {
        fn(0, count);
        return;
    }
    long long chunk = (count + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    for (long long t = 0; t < nthreads; ++t) {
        long long lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errs[size_t(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

} // namespace knotconc::detail
