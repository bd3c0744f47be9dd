#ifndef SUBCYC_PARALLEL_HPP
#define SUBCYC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace subcyc {

// Worker count for fan-out over independent sub-computations. The SUBCYC_THREADS
// environment variable caps it; the default is the hardware concurrency.
unsigned thread_budget();

// Run fn(i) for every i in [0, count). Work items must be independent; callers
// collect results by index, so the observable output does not depend on
// scheduling. The first exception thrown by a worker is rethrown here.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned budget = thread_budget();
    if (count == 0) return;
    if (budget <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(budget, count));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace subcyc

#endif
