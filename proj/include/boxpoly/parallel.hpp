#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace boxpoly {

/// Evaluate fn(i) for i in [0, count) on up to `jobs` worker threads and
/// return the results indexed by i. Workers pull indices from a shared
/// counter; results land in their input slot, so the output order (and
/// anything serialized from it) is independent of the worker count.
template <class R, class Fn>
std::vector<R> parallel_map_ordered(std::size_t count, int jobs, Fn&& fn) {
    std::vector<R> results(count);
    if (count == 0) return results;
    const std::size_t workers =
        jobs <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) std::rethrow_exception(failure);
    return results;
}

}  // namespace boxpoly
