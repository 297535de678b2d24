#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "assort/error.hpp"
#include "assort/stats.hpp"
#include "assort/types.hpp"
#include "assort/word_traits.hpp"

namespace assort {

// Key projection. Plain words sort as their own key; KeyedElement carries a
// payload that travels with it. User element types can add an overload.
template <UnsignedWord W>
constexpr W key_of(const W& value) {
  return value;
}

template <UnsignedWord W>
constexpr W key_of(const KeyedElement<W>& element) {
  return element.key;
}

namespace detail {
template <class E>
using key_type_of = std::remove_cvref_t<decltype(key_of(std::declval<const E&>()))>;
}

template <class E>
concept Sortable = UnsignedWord<detail::key_type_of<E>>;

// Maps a key into the pass interval [delta, delta + n): slot key - delta, or
// nothing when the key lies beyond the interval.
template <UnsignedWord W>
constexpr std::optional<std::size_t> hash_key(W key, W delta, std::size_t n) {
  assert(key >= delta);
  const std::size_t slot = std::size_t(W(key - delta));
  if (slot < n) return slot;
  return std::nullopt;
}

// One scan settles every element of the region: keys inside [delta, delta+n)
// become nodes at slot key - delta (the key itself marks the slot, nothing is
// written), the rest are counted into state.deferred with state.delta_next
// tracking their minimum. Keys swapped behind the scan were settled already,
// so the scan never revisits them.
//
// Raises duplicate_key when the swap target is already a node: with the hash
// i = key - delta, that is the only way two equal keys can meet.
template <class E, UnsignedWord W>
  requires Sortable<E>
void implicit_practice(std::span<E> region, PassState<W>& state, SortStats& stats) {
  const std::size_t n = region.size();
  state.len = n;
  state.practiced = 0;
  state.idle = 0;
  state.deferred = 0;
  std::size_t pass_swaps = 0;
  std::size_t i = 0;
  while (i < n) {
    const W key = key_of(region[i]);
    ++stats.reads;
    assert(key >= state.delta);
    const std::size_t slot = std::size_t(W(key - state.delta));
    if (slot >= n) {  // beyond the interval: settled in a later pass
      ++state.deferred;
      state.delta_next = std::min(state.delta_next, key);
      ++i;
      continue;
    }
    if (slot == i) {  // the key satisfies the hash at its own position: a node
      ++state.practiced;
      ++i;
      continue;
    }
    const W occupant = key_of(region[slot]);
    ++stats.reads;
    if (std::size_t(W(occupant - state.delta)) == slot)
      throw SortError::duplicate_key(std::uint64_t(key), state.offset + i);
    std::swap(region[i], region[slot]);
    ++pass_swaps;
    if (pass_swaps > 2 * n)  // only undetected equal keys can cycle this long
      throw SortError::duplicate_key(std::uint64_t(key), state.offset + i);
    if (slot < i) {  // the incoming element was classified when the scan passed it
      ++state.practiced;
      ++i;
    }
  }
  stats.swaps += pass_swaps;
}

// Clusters the state.practiced nodes at the front of the region, preserving
// their relative (ascending-key) order. The prefix is final afterwards.
template <class E, UnsignedWord W>
  requires Sortable<E>
void implicit_store(std::span<E> region, const PassState<W>& state, SortStats& stats) {
  std::size_t front = 0;
  std::size_t remaining = state.practiced;
  for (std::size_t i = 0; i < region.size() && remaining > 0; ++i) {
    const W key = key_of(region[i]);
    ++stats.reads;
    if (std::size_t(W(key - state.delta)) != i) continue;
    if (i != front) {
      std::swap(region[i], region[front]);
      ++stats.swaps;
    }
    ++front;
    --remaining;
  }
}

// Sorts elements ascending by key, one interval of size |region| per pass.
// Keys must be pairwise distinct; keys are read and moved, never rewritten,
// so the full word range [0, 2^w) is legal.
template <class E>
  requires Sortable<E>
SortStats sort_readonly(std::span<E> elements, SortOptions options = {}) {
  using W = detail::key_type_of<E>;
  SortStats stats;
  if (elements.empty()) return stats;
  if (elements.size() == 1) {
    stats.passes = 1;
    stats.per_pass.push_back({1, 0, 0, 0});
    return stats;
  }

  PassState<W> state;
  W upper = word_max<W>;
  if (options.delta_mode == DeltaMode::prescan) {
    W lo = key_of(elements[0]);
    W hi = lo;
    for (const E& e : elements) {
      const W k = key_of(e);
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
    stats.reads += elements.size();
    state.delta = lo;
    upper = hi;  // stays an upper bound for every later pass
  } else {
    state.delta = 0;
  }

  std::size_t offset = 0;
  while (true) {
    std::span<E> region = elements.subspan(offset);
    state.offset = offset;
    state.delta_next = upper;
    const std::size_t swaps_before = stats.swaps;
    implicit_practice(region, state, stats);
    implicit_store(region, state, stats);
    ++stats.passes;
    stats.per_pass.push_back(
        {state.practiced, 0, state.deferred, stats.swaps - swaps_before});
    if (state.deferred == 0) break;
    offset += state.practiced;
    state.delta = state.delta_next;
  }
  return stats;
}

template <class E>
  requires Sortable<E>
SortStats sort_readonly(std::vector<E>& elements, SortOptions options = {}) {
  return sort_readonly(std::span<E>(elements), options);
}

}  // namespace assort
