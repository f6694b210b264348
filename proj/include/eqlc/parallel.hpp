#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace eqlc {

inline int& jobs_override() {
    static int jobs = 0;
    return jobs;
}

inline void set_default_jobs(int jobs) { jobs_override() = jobs; }

inline int default_jobs() {
    if (jobs_override() > 0) return jobs_override();
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

// Runs fn(i) for i in [0, count) across `jobs` threads (self-scheduling by
// atomic counter).  Merge order must not matter to callers; each index is
// visited exactly once.  The first exception is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn, int jobs = 0) {
    if (jobs <= 0) jobs = default_jobs();
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t nthreads = std::min<std::size_t>(jobs, count);
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load() && err) std::rethrow_exception(err);
}

}  // namespace eqlc
