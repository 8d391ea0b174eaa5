#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace indlab
{
    // INDLAB_WORKERS if set to a positive integer, else the hardware thread
    // count, else 1.
    auto default_workers() -> unsigned;

    // Runs task(shard) for every shard in [0, shards) on up to `workers`
    // threads and returns the results indexed by shard. The shard layout is
    // chosen by the caller and never by the worker count, so any in-order
    // reduction of the result vector is independent of `workers`.
    template <typename Result, typename Task>
    auto run_shards(std::size_t shards, unsigned workers, Task && task) -> std::vector<Result>
    {
        std::vector<Result> results(shards);
        if (workers <= 1 || shards <= 1) {
            for (std::size_t s = 0; s < shards; ++s)
                results[s] = task(s);
            return results;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t s; (s = next.fetch_add(1)) < shards;) {
                try {
                    results[s] = task(s);
                }
                catch (...) {
                    std::lock_guard lock{failure_mutex};
                    if (! failure)
                        failure = std::current_exception();
                }
            }
        };

        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers && w < shards; ++w)
            threads.emplace_back(worker);
        threads.clear();
        if (failure)
            std::rethrow_exception(failure);
        return results;
    }
}
