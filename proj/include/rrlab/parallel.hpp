#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rrlab
{
    /// Evaluates work(i) for i in [0, count) on a pool of threads and returns
    /// the results in index order. The first exception thrown by any item is
    /// rethrown after all workers finish.
    template <typename Result, typename Work>
    auto parallel_map(std::size_t count, Work && work, unsigned threads = 0) -> std::vector<Result>
    {
        std::vector<Result> results(count);
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    results[i] = work(i);
                }
                catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (! failure)
                        failure = std::current_exception();
                }
            }
        };

        if (threads <= 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (unsigned k = 0; k < threads; ++k)
                pool.emplace_back(worker);
        }
        if (failure)
            std::rethrow_exception(failure);
        return results;
    }
}
