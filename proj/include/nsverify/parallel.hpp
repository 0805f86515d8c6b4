#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace nsv {

/// Worker count: hardware concurrency capped by the NSVERIFY_THREADS
/// environment variable (>= 1).
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NSVERIFY_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && unsigned(cap) < n) n = unsigned(cap);
    }
    return n;
}

/// Static block partition of [0, count) over worker_count() threads.
/// fn must be safe to call concurrently on distinct indices.
template <typename F>
void parallel_for(std::size_t count, F&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nsv
