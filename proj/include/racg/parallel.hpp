#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace racg {

// Runs f(0..n-1) on up to `threads` workers pulling from a shared counter.
// The first exception thrown by any worker is rethrown after all join.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    std::vector<std::thread> pool;
    int workers = threads < static_cast<int>(n) ? threads : static_cast<int>(n);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fail_mu);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace racg
