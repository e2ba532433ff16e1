#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace covarray {

/// Symbol of a covering array alphabet. Alphabets are GF(q) with q <= 256.
using Symbol = std::uint8_t;

/// Violated precondition on user-supplied parameters (bad q, bad shape, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file or descriptor.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two verification engines disagreed on an object they both certify.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  while (exponent-- > 0) r *= base;
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors by trial division, ascending.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  while (q > 1) {
    q /= f[0];
    ++e;
  }
  return std::make_pair(static_cast<std::uint32_t>(f[0]), e);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Worker count: explicit request, else COVARRAY_THREADS, else hardware concurrency.
inline unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("COVARRAY_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Number of chunks parallel_chunks() will use for n items on `threads` workers.
inline std::size_t chunk_count(std::size_t n, unsigned threads) {
  if (n == 0) return 0;
  return threads <= 1 ? 1 : std::min<std::size_t>(n, std::size_t{threads} * 8);
}

/// Splits [0, n) into chunk_count(n, threads) contiguous chunks and runs
/// body(begin, end, chunk) for each, dispatching chunks dynamically over the
/// workers. Chunks are ordered, so per-chunk results merged by chunk index
/// reproduce the sequential order regardless of scheduling.
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(n, threads);
  auto range = [&](std::size_t c) { return std::make_pair(n * c / chunks, n * (c + 1) / chunks); };
  if (chunks <= 1) {
    if (n > 0) body(0, n, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = next++; c < chunks; c = next++) {
          auto [b, e] = range(c);
          body(b, e, c);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace covarray
