#pragma once

// Data-parallel map over an index range.  Every job writes only its own
// output slot, so the assembled result is identical for any worker count;
// the serial loop is the reference the OpenMP path is tested against.

#include <atomic>
#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reesmult {

inline int resolve_workers(int workers) {
    if (workers == 1) return 1;
#ifdef _OPENMP
    int avail = omp_get_max_threads();
    if (workers <= 0 || workers > avail) return avail > 1 ? avail : 1;
    return workers;
#else
    return 1;
#endif
}

// Serial reference implementation.
template <typename Out, typename Fn>
std::vector<Out> map_indexed_serial(std::size_t n, Fn&& fn) {
    std::vector<Out> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

// OpenMP kernel; bit-identical to the serial path by construction.  A job
// exception must not escape the parallel region, so the first one is captured
// and rethrown after the loop; remaining jobs are skipped.
template <typename Out, typename Fn>
std::vector<Out> map_indexed(std::size_t n, Fn&& fn, int workers) {
    int w = resolve_workers(workers);
    if (w <= 1 || n <= 1) return map_indexed_serial<Out>(n, fn);
    std::vector<Out> out(n);
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(w)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true))
                failure = std::current_exception();
        }
    }
    if (failed.load()) std::rethrow_exception(failure);
    return out;
}

}  // namespace reesmult
