#include "qhopf/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace qhopf {

int thread_count() {
    if (const char* env = std::getenv("QHOPF_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn) {
    if (n == 0) return;
    int workers = thread_count();
    if ((std::uint64_t)workers > n) workers = (int)n;
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(n, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve((std::size_t)workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace qhopf
