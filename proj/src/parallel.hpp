#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace homlab::detail {

// Runs work(i) for i in [0, count) on up to `jobs` threads, handing out
// indices one at a time. The first exception thrown is rethrown.
template <class Work>
void parallel_for(std::size_t count, unsigned jobs, Work&& work)
{
    jobs = unsigned(std::max<std::size_t>(1, std::min<std::size_t>(jobs, count)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load())
                    return;
                try {
                    work(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace homlab::detail
