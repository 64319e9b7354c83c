#pragma once

#include <cstdlib>
#include <thread>
#include <vector>
#include <functional>
#include <algorithm>

namespace toriclift {

// Worker count: min(hardware, TORIC_LIFT_THREADS if set). Always >= 1.
inline int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("TORIC_LIFT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Runs fn(shard_index, begin, end) on disjoint slices of [0, total).
// Callers keep per-shard outputs and merge deterministically afterwards.
template <typename Fn>
void parallel_shards(std::size_t total, Fn&& fn) {
    int workers = worker_count();
    if (total == 0) return;
    if (workers <= 1 || total == 1) {
        fn(0, std::size_t{0}, total);
        return;
    }
    std::size_t nshards = std::min<std::size_t>(workers, total);
    std::size_t chunk = (total + nshards - 1) / nshards;
    std::vector<std::thread> threads;
    threads.reserve(nshards);
    for (std::size_t s = 0; s < nshards; ++s) {
        std::size_t b = s * chunk;
        std::size_t e = std::min(total, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&fn, s, b, e] { fn(s, b, e); });
    }
    for (auto& t : threads) t.join();
}

} // namespace toriclift
