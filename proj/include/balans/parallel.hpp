#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace balans {

// Runs fn(begin, end) over a static partition of [0, count) on `jobs` threads.
// Work items must be independent; callers keep determinism by writing results
// into preallocated slots indexed by item. jobs <= 1 runs inline.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (count == 0) return;
    if (jobs <= 1 || count == 1) {
        fn(std::size_t(0), count);
        return;
    }
    std::size_t workers = static_cast<std::size_t>(jobs);
    if (workers > count) workers = count;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace balans
