#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace apolar {

// Raised when a configured resource cap (size limit, step budget) is hit.
// The CLI maps it to exit code 3.
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on malformed user input (bad flags, unparsable expressions).
// The CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) {
        r = r * (n - k + t) / t;
    }
    return r;
}

inline mpz_class binom_mpz(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline long long factorial(int n) {
    long long r = 1;
    for (int t = 2; t <= n; ++t) r *= t;
    return r;
}

// Visits every k-subset of {0,...,n-1} in lexicographic order.
inline void for_each_subset(int n, int k,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        fn(idx);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
}

inline int env_thread_override() {
    const char* s = std::getenv("APOLAR_SYZYGY_THREADS");
    if (!s || !*s) return 0;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || v < 1 || v > 1024) return 0;
    return static_cast<int>(v);
}

inline int effective_threads(int requested) {
    int env = env_thread_override();
    if (env > 0) return env;
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(task_index) for every index in [0, count) on `threads` workers.
// Results must be written to pre-sized per-index slots so that the outcome
// is independent of scheduling.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    int w = effective_threads(threads);
    if (w <= 1 || count == 1) {
        for (std::size_t t = 0; t < count; ++t) fn(t);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(w), count);
    std::exception_ptr err;
    std::mutex err_mu;
    for (std::size_t t = 0; t < nw; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= count) break;
                try {
                    fn(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    next.store(count);
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace apolar
