#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace flatmin {

inline constexpr std::string_view kVersion = "0.1.0";

// Thrown for invalid configuration or arguments (CLI maps this to exit 1).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

inline void config_check(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

namespace detail {

inline std::atomic<int>& thread_count() {
    static std::atomic<int> n{1};
    return n;
}

} // namespace detail

inline void set_num_threads(int n) {
    config_check(n >= 1, "thread count must be >= 1");
    detail::thread_count().store(n);
}

inline int num_threads() { return detail::thread_count().load(); }

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks so any
// per-index output written to preallocated slots is identical to the serial
// order. fn must not touch shared mutable state.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int want = num_threads();
    if (want <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(want), n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Fixed-tree pairwise summation. The reduction order never depends on the
// thread count, so multi-threaded runs reproduce serial results bit-for-bit.
inline double pairwise_sum(const double* p, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += p[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(p, half) + pairwise_sum(p + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

inline double pairwise_mean(const std::vector<double>& v) {
    check(!v.empty(), "mean of empty vector");
    return pairwise_sum(v) / static_cast<double>(v.size());
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view s) { return fnv1a64(s.data(), s.size()); }

} // namespace flatmin
