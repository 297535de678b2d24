#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "assort/error.hpp"
#include "assort/word_traits.hpp"

namespace assort {

// Ground-truth comparison sort. The single comparison-based oracle every
// other route is checked against.
template <UnsignedWord W>
std::vector<W> comparison_oracle_sort(std::span<const W> values) {
  std::vector<W> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::size_t default_counting_cap = std::size_t{1} << 26;

// Non-in-place distribution baseline: auxiliary storage proportional to the
// range, so the range is capped.
template <UnsignedWord W>
std::vector<W> counting_sort(std::span<const W> values, W min, W max,
                             std::size_t memory_cap = default_counting_cap) {
  if (values.empty()) return {};
  const std::uint64_t span = std::uint64_t(max) - std::uint64_t(min);
  if (span >= memory_cap)
    throw SortError::malformed_input("counting sort range " + std::to_string(span + 1) +
                                     " exceeds the configured memory cap");
  std::vector<std::size_t> counts(std::size_t(span) + 1, 0);
  for (const W v : values) {
    if (v < min || v > max)
      throw SortError::malformed_input("value " + std::to_string(std::uint64_t(v)) +
                                       " lies outside the stated [min, max]");
    counts[std::size_t(std::uint64_t(v) - min)]++;
  }
  std::vector<W> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t c = 0; c < counts[i]; ++c) out.push_back(W(std::uint64_t(min) + i));
  return out;
}

// Byte-wise least-significant-digit radix sort.
template <UnsignedWord W>
std::vector<W> lsd_radix_sort(std::span<const W> values) {
  std::vector<W> a(values.begin(), values.end());
  std::vector<W> tmp(values.size());
  for (unsigned pass = 0; pass < sizeof(W); ++pass) {
    const unsigned shift = pass * 8;
    std::size_t counts[256] = {};
    for (const W v : a) counts[(v >> shift) & 0xff]++;
    std::size_t offsets[256];
    std::size_t sum = 0;
    for (unsigned b = 0; b < 256; ++b) {
      offsets[b] = sum;
      sum += counts[b];
    }
    for (const W v : a) tmp[offsets[(v >> shift) & 0xff]++] = v;
    std::swap(a, tmp);
  }
  return a;
}

struct VerifyReport {
  enum class Failure { none, not_ascending, multiset_mismatch };
  bool ok = true;
  Failure failure = Failure::none;
  std::size_t index = 0;  // first offending position
};

// Checks that `output` is ascending and a permutation of `input`.
template <UnsignedWord W>
VerifyReport verify(std::span<const W> output, std::span<const W> input) {
  for (std::size_t i = 1; i < output.size(); ++i) {
    if (output[i] < output[i - 1])
      return {false, VerifyReport::Failure::not_ascending, i};
  }
  std::vector<W> a(output.begin(), output.end());
  std::vector<W> b(input.begin(), input.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() != b.size())
    return {false, VerifyReport::Failure::multiset_mismatch, std::min(a.size(), b.size())};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return {false, VerifyReport::Failure::multiset_mismatch, i};
  }
  return {};
}

}  // namespace assort
