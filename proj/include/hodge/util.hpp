#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace hodge {

// Deterministic RNG. mt19937_64 output is fixed by the standard and range()
// maps it with plain modulo, so a given seed yields the same draws on every
// platform (uniform_int_distribution would not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform-ish integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    if (hi <= lo) return lo;
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  // Coin with probability num/den.
  bool chance(long num, long den) { return range(0, den - 1) < num; }

 private:
  std::mt19937_64 eng_;
};

// Runs body(0..n-1), work-stealing over hardware threads. Falls back to a
// plain loop when n is small or only one core is available. The first
// exception thrown by any body is rethrown after all workers stop.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = hw == 0 ? 1 : hw;
  if (nthreads > n) nthreads = n;
  if (nthreads <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex errMu;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t w = 0; w < nthreads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          body(i);
        } catch (...) {
          {
            std::lock_guard<std::mutex> g(errMu);
            if (!err) err = std::current_exception();
          }
          next.store(n);
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hodge
