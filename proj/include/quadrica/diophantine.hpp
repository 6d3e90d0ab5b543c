#pragma once

#include <functional>
#include <future>
#include <stdexcept>
#include <vector>

#include <quadrica/integer.hpp>

namespace quadrica {

/// A solution of C(d, 2) = C(2c-1, c-1). Construction re-verifies the
/// equation with two independent from-scratch binomials.
struct Solution {
  Integer d;
  Integer c;
  Integer value;

  Solution(Integer d_, Integer c_, Integer value_)
      : d(std::move(d_)), c(std::move(c_)), value(std::move(value_)) {
    if (binom(d, 2) != value || binom(2 * c - 1, c - 1) != value)
      throw std::logic_error("Solution: verification against direct binomials failed");
  }

  bool operator==(const Solution&) const = default;
};

/// Observer for every scanned c: (c, C(2c-1, c-1), is_triangular).
using ScanHook = std::function<void(long, const Integer&, bool)>;

/// All solutions of C(d, 2) = C(2c-1, c-1) with c_min <= c <= c_max, in
/// increasing c. The central-adjacent binomial is carried incrementally:
///
///   C(2c+1, c) = C(2c-1, c-1) * (2c)(2c+1) / (c (c+1))
///
/// with the divisibility asserted at every step; candidates are tested
/// by inverting the triangular number.
inline std::vector<Solution> search(long c_min, long c_max, const ScanHook& hook = {}) {
  if (c_min < 2) throw std::invalid_argument("search: c_min must be >= 2");
  if (c_max < c_min) throw std::invalid_argument("search: c_max must be >= c_min");
  std::vector<Solution> out;
  Integer value = binom(2 * c_min - 1, c_min - 1);
  for (long c = c_min;; ++c) {
    const std::optional<Integer> d = triangular_inverse(value);
    if (hook) hook(c, value, d.has_value());
    if (d) out.emplace_back(*d, Integer(c), value);
    if (c == c_max) break;
    value *= Integer(2 * c) * Integer(2 * c + 1);
    const Integer den = Integer(c) * Integer(c + 1);
    if (!mpz_divisible_p(value.get_mpz_t(), den.get_mpz_t()))
      throw std::logic_error("search: incremental update not exactly divisible");
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), den.get_mpz_t());
  }
  return out;
}

/// Same result as `search`, computed over disjoint contiguous c-ranges
/// in parallel; each shard seeds its running value from scratch and the
/// merged output is identical to the single-shard scan.
inline std::vector<Solution> search_sharded(long c_min, long c_max, int shards) {
  if (shards < 1) throw std::invalid_argument("search_sharded: shards must be >= 1");
  const long span = c_max - c_min + 1;
  if (shards == 1 || span <= shards) return search(c_min, c_max);
  std::vector<std::future<std::vector<Solution>>> futures;
  futures.reserve(static_cast<std::size_t>(shards));
  const long chunk = (span + shards - 1) / shards;
  for (long lo = c_min; lo <= c_max; lo += chunk) {
    const long hi = std::min(lo + chunk - 1, c_max);
    futures.push_back(std::async(std::launch::async, [lo, hi] { return search(lo, hi); }));
  }
  std::vector<Solution> out;
  for (auto& f : futures) {
    std::vector<Solution> part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace quadrica
