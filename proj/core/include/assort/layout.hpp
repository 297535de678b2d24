#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>

#include "assort/error.hpp"
#include "assort/word_traits.hpp"

namespace assort {

// Field geometry of a node record built for a region of length n:
//
//   bit w-1        tag bit (the MSB marks a word as a node)
//   bits w-b..w-1  position field, b = max(1, ceil(log2 n))
//   bits 0..r-1    bitmask field, r = w - b
//
// The tag bit overlaps the position field; that is legal because the tag is
// released before any position is written (storing clears it first).
template <UnsignedWord W>
struct BitLayout {
  std::size_t n = 0;           // region length the layout was built for
  unsigned pos_width = 0;      // b
  unsigned mask_width = 0;     // r
  W mask_field{};              // low r bits set
  double_word_t<W> capacity{}; // r * n: size of the interval one pass can absorb
};

namespace detail {

inline unsigned ceil_log2(std::size_t n) {
  return n <= 1 ? 0u : unsigned(std::bit_width(std::uint64_t(n) - 1));
}

}  // namespace detail

template <UnsignedWord W>
BitLayout<W> make_layout(std::size_t n) {
  constexpr unsigned w = word_bits<W>;
  assert(n >= 1);
  if (n > std::size_t{half_universe<W>})
    throw SortError::capacity_exceeded(n, w);
  BitLayout<W> layout;
  layout.n = n;
  layout.pos_width = detail::ceil_log2(n);
  if (layout.pos_width == 0) layout.pos_width = 1;  // keeps the tag bit well-defined at n = 1
  layout.mask_width = w - layout.pos_width;
  layout.mask_field = W((W{1} << layout.mask_width) - 1);
  layout.capacity = double_word_t<W>(layout.mask_width) * double_word_t<W>(n);
  return layout;
}

// Same field geometry over a shorter region: the record widths of a run are
// fixed by its initial length, while the interval a later pass can absorb
// shrinks with the remaining region.
template <UnsignedWord W>
BitLayout<W> resized(const BitLayout<W>& layout, std::size_t len) {
  assert(len >= 1 && len <= layout.n);
  BitLayout<W> out = layout;
  out.n = len;
  out.capacity = double_word_t<W>(out.mask_width) * double_word_t<W>(len);
  return out;
}

template <UnsignedWord W>
inline constexpr W record_tag = half_universe<W>;

template <UnsignedWord W>
constexpr W tag_node(W record) {
  return W(record | record_tag<W>);
}

template <UnsignedWord W>
constexpr bool is_node(W record) {
  return (record & record_tag<W>) != 0;
}

// Sets/tests bit k of the bitmask field without touching any other bit.
template <UnsignedWord W>
constexpr W set_mask_bit(W record, unsigned k, const BitLayout<W>& layout) {
  assert(k < layout.mask_width);
  (void)layout;
  return W(record | W(W{1} << k));
}

template <UnsignedWord W>
constexpr bool mask_bit(W record, unsigned k, const BitLayout<W>& layout) {
  assert(k < layout.mask_width);
  (void)layout;
  return ((record >> k) & W{1}) != 0;
}

// Writes pos into the top b bits, dropping the tag; the mask field survives.
template <UnsignedWord W>
constexpr W encode_position(W record, std::size_t pos, const BitLayout<W>& layout) {
  assert(pos < (std::size_t{1} << layout.pos_width));
  return W((record & layout.mask_field) | W(std::uint64_t(pos) << layout.mask_width));
}

template <UnsignedWord W>
constexpr std::size_t decode_position(W record, const BitLayout<W>& layout) {
  return std::size_t(record >> layout.mask_width);
}

}  // namespace assort
