#pragma once

// Index-space work distribution. Tasks must write only to their own slots;
// results then never depend on scheduling or worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lyap {

inline void parallel_for(std::uint64_t count, int workers,
                         const std::function<void(std::uint64_t)>& task) {
    if (workers <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            task(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(std::min<std::uint64_t>(workers, count));
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

}  // namespace lyap
