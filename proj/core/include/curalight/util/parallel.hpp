#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace curalight {

// Runs fn(i) for i in [0, count) on up to max_jobs threads. Rethrows the first
// exception after all workers join. Results must be written to pre-sized slots
// by index so output order never depends on scheduling.
inline void parallel_for(std::size_t count, std::size_t max_jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t jobs = max_jobs == 0 ? 1 : max_jobs;
    if (jobs > count) jobs = count;
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace curalight
