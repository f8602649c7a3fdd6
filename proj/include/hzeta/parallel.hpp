#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace hzeta {

// Deterministic parallel map: each index writes only its own slot, so the
// result does not depend on the thread count.
template <typename F>
void parallel_for_index(std::size_t n, int threads, F&& fn) {
    if (threads <= 0) threads = int(std::thread::hardware_concurrency());
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t per = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * per;
        std::size_t hi = std::min(n, lo + per);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hzeta
