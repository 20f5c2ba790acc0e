#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qclone {

// Worker count: QCLONE_THREADS if set (values < 1 clamp to 1), else the
// hardware concurrency. Outputs never depend on this; only wall time does.
int thread_count();

// Runs body(i) for i in [0, n), partitioned into contiguous blocks across
// threads. Callers keep determinism by writing results to per-index slots
// and reducing sequentially afterwards.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n ? n : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = n * w / workers;
        const std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &body, &first_error, &error_mutex] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qclone
