#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dsf {

/// Worker count from DSF_WORKERS, else the hardware concurrency.
int default_workers();

/// Runs f(i) for i in [0, count) on up to `workers` threads (0 = default).
/// Indices are handed out dynamically; callers write results into per-index
/// slots so the outcome does not depend on scheduling. The first exception
/// thrown by any call is rethrown after all threads finish.
template <typename F>
void parallel_for(std::size_t count, int workers, F&& f) {
    if (workers <= 0)
        workers = default_workers();
    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count || failed.load(std::memory_order_relaxed))
                return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace dsf
