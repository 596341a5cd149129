// parallel.hpp - Work-stealing loop for independent per-source solves.

#ifndef ADDSPAN_PARALLEL_HPP
#define ADDSPAN_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace addspan {

inline unsigned default_worker_count(std::size_t items) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (items < hw) hw = static_cast<unsigned>(items);
    return hw == 0 ? 1 : hw;
}

// Runs fn(item, worker) for item in [0, count). Results must be merged with
// order-independent reductions (set union, sums, max) so the outcome does
// not depend on the worker count or schedule.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t, unsigned)>& fn) {
    if (count == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i, w);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace addspan

#endif
