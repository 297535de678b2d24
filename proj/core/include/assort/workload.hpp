#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "assort/error.hpp"
#include "assort/layout.hpp"
#include "assort/word_traits.hpp"

namespace assort {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Tiny deterministic generator; identical streams on every platform.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() { return splitmix64(state); }

  // Unbiased draw from [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t limit = std::uint64_t(-bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = next();
    } while (x < limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
};

}  // namespace detail

enum class Dist { uniform_distinct, consecutive_sorted, worst_singleton, full_universe };
enum class RangeUnit { key, record };
enum class SortVariant { readonly, modifiable };

template <UnsignedWord W>
struct Workload {
  std::size_t n = 0;
  double beta = 1.0;
  Dist dist = Dist::uniform_distinct;
  std::uint64_t seed = 0;
  W min_value{};
  std::uint64_t range_minus_one = 0;  // realized max - min (n > 0)
  std::vector<W> values;
};

namespace detail {

// Interval size the requested beta implies: m = beta * n * unit_size.
inline std::uint64_t requested_range(std::size_t n, double beta, unsigned unit_size) {
  const long double m = (long double)(beta) * (long double)(n) * (long double)(unit_size);
  if (!(m >= 1.0L) || m > 0x1p64L)
    throw SortError::malformed_input("requested range is out of the word universe");
  if (m >= 0x1p64L - 1.0L) return ~std::uint64_t{0};  // saturate at the universe size
  return std::uint64_t(m + 0.5L);
}

// n distinct draws from [base, base + m), both endpoints included so the
// realized range equals m exactly. Materializes the interval below the cap,
// falls back to rejection sampling above it.
template <UnsignedWord W>
std::vector<W> sample_distinct(std::size_t n, W base, std::uint64_t m, detail::Rng& rng,
                               std::size_t materialize_cap = std::size_t{1} << 24) {
  assert(n >= 1 && m >= n);
  std::vector<std::uint64_t> offsets;
  offsets.reserve(n);
  if (n == 1) {
    offsets.push_back(0);
  } else {
    offsets.push_back(0);
    offsets.push_back(m - 1);
    const std::uint64_t interior = m - 2;
    const std::size_t want = n - 2;
    if (want > 0) {
      if (interior <= materialize_cap) {
        std::vector<std::uint64_t> pool(static_cast<std::size_t>(interior));
        std::iota(pool.begin(), pool.end(), std::uint64_t{1});
        for (std::size_t i = 0; i < want; ++i) {  // partial Fisher-Yates
          const std::size_t j = std::size_t(i + rng.below(pool.size() - i));
          std::swap(pool[i], pool[j]);
          offsets.push_back(pool[i]);
        }
      } else {
        std::unordered_set<std::uint64_t> taken;
        taken.reserve(want * 2);
        while (taken.size() < want) {
          const std::uint64_t x = 1 + rng.below(interior);
          if (taken.insert(x).second) offsets.push_back(x);
        }
      }
    }
  }
  rng.shuffle(offsets);
  std::vector<W> values;
  values.reserve(n);
  for (const std::uint64_t off : offsets) values.push_back(W(std::uint64_t(base) + off));
  return values;
}

}  // namespace detail

// n distinct values drawn uniformly from an interval of size beta * n (key
// unit) or beta * n * r (record unit), anchored at `base`. Deterministic per
// seed; the interval endpoints are always part of the sample.
template <UnsignedWord W>
Workload<W> gen_uniform_distinct(std::size_t n, double beta, RangeUnit unit,
                                 std::uint64_t seed, W base = 0) {
  Workload<W> w;
  w.n = n;
  w.beta = beta;
  w.dist = Dist::uniform_distinct;
  w.seed = seed;
  if (n == 0) return w;
  const unsigned unit_size = unit == RangeUnit::key ? 1 : make_layout<W>(n).mask_width;
  const std::uint64_t m = detail::requested_range(n, beta, unit_size);
  if (m < n)
    throw SortError::malformed_input("range " + std::to_string(m) + " cannot hold " +
                                     std::to_string(n) + " distinct values");
  if (m - 1 > std::uint64_t(word_max<W>) - std::uint64_t(base))
    throw SortError::malformed_input("interval exceeds the word universe");
  detail::Rng rng(seed);
  w.values = detail::sample_distinct<W>(n, base, m, rng);
  w.min_value = base;
  w.range_minus_one = n == 1 ? 0 : m - 1;
  return w;
}

template <UnsignedWord W>
Workload<W> gen_consecutive_sorted(std::size_t n, W base = 0) {
  Workload<W> w;
  w.n = n;
  w.beta = 1.0;
  w.dist = Dist::consecutive_sorted;
  if (n == 0) return w;
  if (std::uint64_t(n) - 1 > std::uint64_t(word_max<W>) - std::uint64_t(base))
    throw SortError::malformed_input("consecutive run exceeds the word universe");
  w.values.resize(n);
  std::iota(w.values.begin(), w.values.end(), base);
  w.min_value = base;
  w.range_minus_one = n - 1;
  return w;
}

// Adversarial schedule leaving exactly one value per pass interval: stride n
// for the read-only variant, stride r*n for the modifiable one. Emitted in
// ascending order, so no swap ever happens either.
template <UnsignedWord W>
Workload<W> gen_worst_singleton(std::size_t n, SortVariant variant) {
  Workload<W> w;
  w.n = n;
  w.dist = Dist::worst_singleton;
  if (n == 0) return w;
  std::uint64_t stride = 1;
  std::uint64_t limit = std::uint64_t(word_max<W>);
  if (variant == SortVariant::readonly) {
    stride = n;
  } else {
    const BitLayout<W> layout = make_layout<W>(n);
    stride = std::uint64_t(layout.mask_width) * n;
    limit = std::uint64_t(half_universe<W>) - 1;  // values must keep the tag bit free
  }
  if (n > 1 && std::uint64_t(n - 1) > limit / stride)
    throw SortError::malformed_input("worst-case schedule for n = " + std::to_string(n) +
                                     " overflows " + std::to_string(word_bits<W>) +
                                     "-bit words");
  w.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.values.push_back(W(i * stride));
  w.min_value = 0;
  w.range_minus_one = std::uint64_t(n - 1) * stride;
  w.beta = double(w.range_minus_one + 1) / double(n);
  return w;
}

// n distinct values anywhere in [0, 2^w).
template <UnsignedWord W>
Workload<W> gen_full_universe(std::size_t n, std::uint64_t seed) {
  Workload<W> w;
  w.n = n;
  w.dist = Dist::full_universe;
  w.seed = seed;
  if (n == 0) return w;
  constexpr unsigned bits = word_bits<W>;
  if constexpr (bits < 64) {
    if (std::uint64_t(n) > (std::uint64_t{1} << bits))
      throw SortError::malformed_input("universe of " + std::to_string(bits) +
                                       "-bit words cannot hold " + std::to_string(n) +
                                       " distinct values");
  }
  detail::Rng rng(seed);
  if (bits <= 16) {
    std::vector<W> pool(std::size_t{1} << bits);
    std::iota(pool.begin(), pool.end(), W{0});
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = std::size_t(i + rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(n);
    w.values = std::move(pool);
  } else {
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(n * 2);
    w.values.reserve(n);
    while (w.values.size() < n) {
      const W v = W(rng.next());
      if (taken.insert(std::uint64_t(v)).second) w.values.push_back(v);
    }
  }
  W lo = w.values[0];
  W hi = lo;
  for (const W v : w.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  w.min_value = lo;
  w.range_minus_one = std::uint64_t(hi) - std::uint64_t(lo);
  w.beta = double(w.range_minus_one + 1) / double(n);
  return w;
}

// Smallest k with (beta-1)^(k-1) / beta^k <= 1/n: the pass count a uniform
// workload of ratio beta is expected to need. Log-space to avoid overflow.
// A single interval covers everything when beta <= 1, hence k = 1 there.
inline std::size_t predict_passes_uniform(std::size_t n, double beta) {
  if (!(beta > 0.0))
    throw SortError::malformed_input("beta must be positive");
  if (beta <= 1.0 || n <= 1) return 1;
  const long double log_beta = std::log((long double)(beta));
  const long double log_bm1 = std::log((long double)(beta) - 1.0L);
  const long double target = -std::log((long double)(n));
  constexpr long double eps = 1e-9L;
  constexpr std::size_t hard_cap = 1u << 24;
  for (std::size_t k = 1; k < hard_cap; ++k) {
    if ((long double)(k - 1) * log_bm1 - (long double)(k)*log_beta <= target + eps)
      return k;
  }
  throw SortError::malformed_input("pass prediction did not converge");
}

// Upper bound on the pass count for a range-m workload when one pass absorbs
// an interval of `pass_capacity` values: ceil((m-1)/(capacity-1)) + 1.
inline std::size_t worst_case_pass_bound(std::uint64_t range, std::uint64_t pass_capacity) {
  if (range <= pass_capacity || pass_capacity <= 1) return range <= pass_capacity ? 1 : range;
  const std::uint64_t num = range - 1;
  const std::uint64_t den = pass_capacity - 1;
  return std::size_t((num + den - 1) / den) + 1;
}

}  // namespace assort
