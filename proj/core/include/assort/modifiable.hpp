#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "assort/error.hpp"
#include "assort/layout.hpp"
#include "assort/stats.hpp"
#include "assort/types.hpp"
#include "assort/word_traits.hpp"

namespace assort {

// Slot of a value in the two-dimensional subspace overlaid on the region:
// node index along the region, bit index along the node's record.
struct NodeSlot {
  std::size_t node = 0;
  unsigned bit = 0;

  friend bool operator==(const NodeSlot&, const NodeSlot&) = default;
};

// value -> (node (value-delta)/r, bit (value-delta)%r), or nothing when the
// value lies beyond the r*n interval. Monotone: larger values map to
// lexicographically larger slots, which is what makes retrieval emit
// ascending output.
template <UnsignedWord W>
std::optional<NodeSlot> super_hash(W value, W delta, const BitLayout<W>& layout) {
  assert(value >= delta);
  const std::uint64_t distance = std::uint64_t(value) - std::uint64_t(delta);
  if (double_word_t<W>(distance) >= layout.capacity) return std::nullopt;
  return NodeSlot{std::size_t(distance / layout.mask_width),
                  unsigned(distance % layout.mask_width)};
}

// Exact inverse of super_hash on [delta, delta + r*n).
template <UnsignedWord W>
W inverse_super_hash(std::size_t node, unsigned bit, W delta, const BitLayout<W>& layout) {
  assert(node < layout.n && bit < layout.mask_width);
  return W(std::uint64_t(node) * layout.mask_width + bit + std::uint64_t(delta));
}

// Practices every value of the interval [delta, delta + r*n): the first value
// hitting a node slot displaces the occupant to the scan position and leaves
// a tagged record behind; later values only set their bit in that record and
// stay in place as idle words (their stored value no longer matters). Values
// below delta are dead remnants of earlier intervals and are skipped; values
// beyond the interval are counted into state.deferred.
//
// Raises duplicate_key when a bit to be set is already set: equal values
// always hash to the same slot in the pass where they are first practiced.
template <UnsignedWord W>
void practice(std::span<W> region, const BitLayout<W>& layout, PassState<W>& state,
              SortStats& stats) {
  const std::size_t n = region.size();
  assert(layout.n == n);
  state.len = n;
  state.practiced = 0;
  state.idle = 0;
  state.deferred = 0;
  std::size_t i = 0;
  while (i < n) {
    const W value = region[i];
    ++stats.reads;
    if (value < state.delta) {  // settled in an earlier interval; dead weight
      ++i;
      continue;
    }
    if (is_node(value)) {
      ++i;
      continue;
    }
    const auto slot = super_hash(value, state.delta, layout);
    if (!slot) {
      ++state.deferred;
      state.delta_next = std::min(state.delta_next, value);
      ++i;
      continue;
    }
    W& target = region[slot->node];
    ++stats.reads;
    if (!is_node(target)) {
      // first hit: occupant moves out, the slot becomes a tagged record
      region[i] = target;  // self-move when slot->node == i
      if (slot->node != i) ++stats.moves;
      target = set_mask_bit(tag_node(W{0}), slot->bit, layout);
      ++state.practiced;
      if (slot->node <= i) ++i;
    } else {
      if (mask_bit(target, slot->bit, layout))
        throw SortError::duplicate_key(std::uint64_t(value), state.offset + i);
      target = set_mask_bit(target, slot->bit, layout);
      ++state.idle;
      ++i;
    }
  }
}

// Clusters the records at the front of the region in relative order, encoding
// each record's absolute pre-store position (its node index) into the top b
// bits. The tag is released in the process.
template <UnsignedWord W>
void store(std::span<W> region, const BitLayout<W>& layout, const PassState<W>& state,
           SortStats& stats) {
  std::size_t front = 0;
  std::size_t remaining = state.practiced;
  for (std::size_t i = 0; i < region.size() && remaining > 0; ++i) {
    const W value = region[i];
    ++stats.reads;
    if (!is_node(value)) continue;
    region[i] = encode_position(value, i, layout);
    if (i != front) {
      std::swap(region[i], region[front]);
      ++stats.swaps;
    }
    ++front;
    --remaining;
  }
}

// Partitions the unsettled tail [practiced, len) so that dead idle slots
// (values below delta + r*n, including any stale values below delta) precede
// the deferred values. Unstable.
template <UnsignedWord W>
void partition_idle(std::span<W> region, const BitLayout<W>& layout,
                    const PassState<W>& state, SortStats& stats) {
  const double_word_t<W> bound = double_word_t<W>(state.delta) + layout.capacity;
  std::size_t lo = state.practiced;
  std::size_t hi = region.size();
  while (true) {
    while (lo < hi && (++stats.reads, double_word_t<W>(region[lo]) < bound)) ++lo;
    while (lo < hi && (++stats.reads, double_word_t<W>(region[hi - 1]) >= bound)) --hi;
    if (lo >= hi) break;
    std::swap(region[lo], region[hi - 1]);
    ++stats.swaps;
    ++lo;
    --hi;
  }
}

namespace detail {

// Expands records [0, record_count) right to left into the window ending at
// `end`, one value per set mask bit, ascending overall. Each record is read
// into a scratch word first: the final write may land on the record's own
// slot, and nothing else of the record block is ever overwritten before it
// is read (the write cursor stays at or above the record cursor).
template <UnsignedWord W>
std::size_t expand_records(std::span<W> region, const BitLayout<W>& layout, W delta,
                           std::size_t record_count, std::size_t end, SortStats& stats) {
  std::size_t p = end;
  for (std::size_t i = record_count; i-- > 0;) {
    const W record = region[i];
    ++stats.reads;
    const std::size_t node = decode_position(record, layout);
    for (unsigned k = layout.mask_width; k-- > 0;) {
      if (((record >> k) & W{1}) == 0) continue;
      assert(p > 0);
      region[--p] = inverse_super_hash(node, k, delta, layout);
    }
  }
  return end - p;
}

template <UnsignedWord W>
void validate_input(std::span<const W> values, SortStats& stats) {
  if (values.size() > std::size_t{half_universe<W>})
    throw SortError::capacity_exceeded(values.size(), word_bits<W>);
  for (std::size_t i = 0; i < values.size(); ++i) {
    ++stats.reads;
    if (is_node(values[i]))
      throw SortError::malformed_input(
          "value " + std::to_string(std::uint64_t(values[i])) + " at position " +
          std::to_string(i) + " has the tag bit set; modifiable-variant input must stay below 2^" +
          std::to_string(word_bits<W> - 1));
  }
}

}  // namespace detail

// Reconstructs the sorted values of the practiced interval from the records:
// region[0, practiced+idle) becomes the ascending values, and the count
// expanded (practiced + idle) is returned. Slots [practiced, practiced+idle)
// are dead and never read.
template <UnsignedWord W>
std::size_t retrieve(std::span<W> region, const BitLayout<W>& layout,
                     const PassState<W>& state, SortStats& stats) {
  return detail::expand_records(region, layout, state.delta, state.practiced,
                                state.practiced + state.idle, stats);
}

// Sorts distinct integers ascending, one r*n interval per pass. Requires
// n <= 2^(w-1) and every value < 2^(w-1) (the tag bit must be free); use
// sort_full_universe for arbitrary words.
template <UnsignedWord W>
SortStats sort_sequential(std::span<W> values, SortOptions options = {}) {
  SortStats stats;
  if (values.empty()) return stats;
  detail::validate_input(std::span<const W>(values), stats);
  if (values.size() == 1) {
    stats.passes = 1;
    stats.per_pass.push_back({1, 0, 0, 0});
    return stats;
  }

  PassState<W> state;
  W upper = word_max<W>;
  if (options.delta_mode == DeltaMode::prescan) {
    W lo = values[0];
    W hi = lo;
    for (const W v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    stats.reads += values.size();
    state.delta = lo;
    upper = hi;
  } else {
    state.delta = 0;
  }

  const BitLayout<W> run_layout = make_layout<W>(values.size());
  std::size_t offset = 0;
  while (true) {
    std::span<W> region = values.subspan(offset);
    const BitLayout<W> layout = resized(run_layout, region.size());
    state.offset = offset;
    state.delta_next = upper;
    const std::size_t swaps_before = stats.swaps;
    practice(region, layout, state, stats);
    store(region, layout, state, stats);
    partition_idle(region, layout, state, stats);
    retrieve(region, layout, state, stats);
    ++stats.passes;
    stats.per_pass.push_back(
        {state.practiced, state.idle, state.deferred, stats.swaps - swaps_before});
    if (state.deferred == 0) break;
    offset += state.practiced + state.idle;
    state.delta = state.delta_next;
  }
  return stats;
}

namespace detail {

// One recursion frame: practice + store, recurse on the unsettled tail, then
// expand this frame's records immediately left of the block the subcall
// produced. Returns the total number of values expanded so far, which tells
// the caller where its own expansion ends.
template <UnsignedWord W>
std::size_t sort_recursive_frame(std::span<W> region, const BitLayout<W>& run_layout,
                                 W delta, W upper, std::size_t offset, SortStats& stats) {
  const BitLayout<W> layout = resized(run_layout, region.size());
  PassState<W> state;
  state.delta = delta;
  state.delta_next = upper;
  state.offset = offset;
  const std::size_t swaps_before = stats.swaps;
  practice(region, layout, state, stats);
  store(region, layout, state, stats);
  ++stats.passes;
  stats.per_pass.push_back(
      {state.practiced, state.idle, state.deferred, stats.swaps - swaps_before});
  std::size_t expanded = 0;
  if (state.deferred > 0) {
    expanded = sort_recursive_frame(region.subspan(state.practiced), run_layout,
                                    state.delta_next, upper, offset + state.practiced, stats);
  }
  expand_records(region, layout, delta, state.practiced, region.size() - expanded, stats);
  return expanded + state.practiced + state.idle;
}

}  // namespace detail

// Recursive flavour of sort_sequential: no partition step, one stack frame
// per interval (depth = pass count, at most n). Output is identical to the
// sequential driver.
template <UnsignedWord W>
SortStats sort_recursive(std::span<W> values, SortOptions options = {}) {
  SortStats stats;
  if (values.empty()) return stats;
  detail::validate_input(std::span<const W>(values), stats);
  if (values.size() == 1) {
    stats.passes = 1;
    stats.per_pass.push_back({1, 0, 0, 0});
    return stats;
  }

  W delta = 0;
  W upper = word_max<W>;
  if (options.delta_mode == DeltaMode::prescan) {
    W lo = values[0];
    W hi = lo;
    for (const W v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    stats.reads += values.size();
    delta = lo;
    upper = hi;
  }

  const BitLayout<W> run_layout = make_layout<W>(values.size());
  const std::size_t expanded = detail::sort_recursive_frame(std::span<W>(values), run_layout,
                                                            delta, upper, 0, stats);
  assert(expanded == values.size());
  (void)expanded;
  return stats;
}

// Lifts the tag-bit restriction: partitions around 2^(w-1), shifts the upper
// part down, sorts both parts sequentially and shifts back. Accepts distinct
// values anywhere in [0, 2^w).
template <UnsignedWord W>
SortStats sort_full_universe(std::span<W> values, SortOptions options = {}) {
  SortStats stats;
  if (values.size() <= 1) {
    stats.passes = values.size();
    if (!values.empty()) stats.per_pass.push_back({1, 0, 0, 0});
    return stats;
  }

  constexpr W pivot = half_universe<W>;
  std::size_t lo = 0;
  std::size_t hi = values.size();
  while (true) {
    while (lo < hi && (++stats.reads, values[lo] < pivot)) ++lo;
    while (lo < hi && (++stats.reads, values[hi - 1] >= pivot)) --hi;
    if (lo >= hi) break;
    std::swap(values[lo], values[hi - 1]);
    ++stats.swaps;
    ++lo;
    --hi;
  }
  const std::size_t split = lo;

  for (std::size_t i = split; i < values.size(); ++i) values[i] = W(values[i] - pivot);
  SortStats low_stats = sort_sequential(values.first(split), options);
  SortStats high_stats;
  try {
    high_stats = sort_sequential(values.subspan(split), options);
  } catch (const SortError& e) {
    if (e.kind() == ErrorKind::duplicate_key)
      throw SortError::duplicate_key(e.value() + std::uint64_t(pivot), split + e.position());
    throw;
  }
  for (std::size_t i = split; i < values.size(); ++i) values[i] = W(values[i] + pivot);

  stats.merge(low_stats);
  stats.merge(high_stats);
  return stats;
}

template <UnsignedWord W>
SortStats sort_sequential(std::vector<W>& values, SortOptions options = {}) {
  return sort_sequential(std::span<W>(values), options);
}

template <UnsignedWord W>
SortStats sort_recursive(std::vector<W>& values, SortOptions options = {}) {
  return sort_recursive(std::span<W>(values), options);
}

template <UnsignedWord W>
SortStats sort_full_universe(std::vector<W>& values, SortOptions options = {}) {
  return sort_full_universe(std::span<W>(values), options);
}

}  // namespace assort
