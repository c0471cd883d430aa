#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace sperner {

/// Maps fn over [0, count) with up to `threads` workers, collecting results
/// by index. The reduction order is the index order, so the outcome is
/// identical for every worker count.
template <typename T, typename Fn>
std::vector<T> ordered_parallel_map(std::uint64_t count, int threads, Fn&& fn) {
    std::vector<T> results(count);
    if (threads <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::uint64_t> next{0};
    const int workers = static_cast<int>(std::min<std::uint64_t>(count, threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                results[i] = fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return results;
}

}  // namespace sperner
