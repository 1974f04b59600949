#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace levyfp {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items pull
// from a shared counter; each item must write only to its own slot so the
// result is identical at any parallelism degree.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& fn) {
    if (count == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(count, jobs > 0 ? static_cast<std::size_t>(jobs) : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace levyfp
