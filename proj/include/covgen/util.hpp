/* Small shared helpers: error types, integer utilities, deterministic parallel map. */
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace covgen {

// Thrown when a caller violates a documented precondition.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency check fails (a bug, or bad input data
// that slipped past validation). Carries enough text to diagnose.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw usage_error(msg);
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw internal_error(msg);
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Falling factorial [a]_k = a (a-1) ... (a-k+1); [a]_0 = 1.
inline mpz_class falling(long a, unsigned k) {
  mpz_class r = 1;
  for (unsigned j = 0; j < k; ++j) r *= (a - long(j));
  return r;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Applies fn(i) for i in [0, n) across `threads` workers and returns the
// results in index order, so the output is independent of the thread count.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace covgen
