#include "weakhopf/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace wha {

namespace {
unsigned g_jobs = 1;
}

unsigned worker_count() { return g_jobs; }

void set_worker_count(unsigned jobs) {
    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
        if (jobs == 0) jobs = 1;
    }
    g_jobs = jobs;
}

void parallel_for(std::uint32_t n, const std::function<void(std::uint32_t)>& fn) {
    const unsigned jobs = g_jobs;
    if (jobs <= 1 || n < 2) {
        for (std::uint32_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> pool;
    const unsigned count = std::min<std::uint32_t>(jobs, n);
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint32_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace wha
