#pragma once

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace widomkit {

/// Worker count used by parallel loops. Defaults to the hardware count,
/// capped by the WIDOMKIT_THREADS environment variable when set.
inline int thread_count() {
    static const int n = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0) hw = 1;
        if (const char* env = std::getenv("WIDOMKIT_THREADS")) {
            char* end = nullptr;
            long cap = std::strtol(env, &end, 10);
            if (end == env || cap < 1) return 1;
            if (cap < hw) hw = static_cast<int>(cap);
        }
        return hw;
    }();
    return n;
}

/// Runs fn(i) for i in [0, n). Each index is processed exactly once; results
/// must be written to per-index slots so the outcome is independent of the
/// thread count.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    const int workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int spawn = workers - 1;
    if (static_cast<std::size_t>(spawn) > n - 1) spawn = static_cast<int>(n - 1);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace widomkit
