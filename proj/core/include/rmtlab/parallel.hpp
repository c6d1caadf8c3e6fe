#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmtlab {

/// Worker count: RMTLAB_THREADS env var if set (>= 1), else the hardware
/// concurrency.  Thread count must never change results, only wall time:
/// callers key their RNG streams and output slots by sample index, and
/// histogram counts are exact integers, so any assignment of samples to
/// threads produces byte-identical output.
inline int thread_count() {
    if (const char* env = std::getenv("RMTLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc >= 1 ? static_cast<int>(hc) : 1;
}

/// body(index, worker_id) for index in [0, n); worker_id in [0, workers).
/// Dynamic scheduling over an atomic counter.
template <class Body>
void parallel_for(long n, Body&& body, int workers = thread_count()) {
    if (n <= 0) return;
    if (workers <= 1 || n == 1) {
        for (long i = 0; i < n; ++i) body(i, 0);
        return;
    }
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](int wid) {
        try {
            for (long i = next.fetch_add(1); i < n && !failed;
                 i = next.fetch_add(1))
                body(i, wid);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!failed) error = std::current_exception();
            failed = true;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace rmtlab
