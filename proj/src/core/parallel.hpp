#pragma once
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gaborlab {

/// Worker cap: GABORLAB_THREADS if set (>= 1), hardware concurrency else.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GABORLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, count) across workers. Callers that reduce
/// floating-point results must store per-index partials and combine them in
/// index order afterwards, so results do not depend on the worker count.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace gaborlab
