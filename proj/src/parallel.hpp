#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ar::detail {

// Worker count: hardware concurrency capped by ALMOSTREP_THREADS when set.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("ALMOSTREP_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Static block partition; fn(begin, end) runs on [begin, end). Results must be
// combined by the caller in index order for deterministic output.
inline void parallel_blocks(std::size_t total, const std::function<void(std::size_t, std::size_t, int)>& fn) {
    int workers = worker_count();
    if (total == 0) return;
    if (workers == 1 || total < 2) {
        fn(0, total, 0);
        return;
    }
    std::size_t nblocks = std::min<std::size_t>(static_cast<std::size_t>(workers), total);
    std::vector<std::thread> threads;
    std::size_t chunk = (total + nblocks - 1) / nblocks;
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = b * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(fn, lo, hi, static_cast<int>(b));
    }
    for (auto& t : threads) t.join();
}

} // namespace ar::detail
