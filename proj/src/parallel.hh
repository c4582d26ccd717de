#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qproj::detail
{
    /// Runs body(i) for i in [0, count) on up to `jobs` threads. Items are handed out
    /// in ascending order; the first exception thrown is rethrown after the join.
    template <typename Body_>
    auto parallel_for(std::size_t count, int jobs, Body_ && body) -> void
    {
        std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : std::size_t(jobs), 1, std::max<std::size_t>(count, 1));
        if (workers == 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (std::size_t i ; (i = next++) < count ; ) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        std::vector<std::thread> threads;
        for (std::size_t t = 0 ; t < workers ; ++t)
            threads.emplace_back(work);
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
