#pragma once

#include <cstddef>
#include <cstdint>

#include "assort/word_traits.hpp"

namespace assort {

// An element with an integer key and satellite data that must travel with it.
// Elements only ever move as wholes; the key/payload binding is never broken.
template <UnsignedWord W>
struct KeyedElement {
  W key{};
  std::uint64_t payload{};

  friend bool operator==(const KeyedElement&, const KeyedElement&) = default;
};

// How a sort run seeds its first interval.
//   prescan:    an O(n) scan finds min (and max) before the first pass.
//   zero_start: skip the scan; the first pass covers [0, capacity) and
//               discovers the true minimum as a side effect, possibly
//               spending one extra pass on shifted data.
enum class DeltaMode { prescan, zero_start };

struct SortOptions {
  DeltaMode delta_mode = DeltaMode::prescan;
};

// Per-pass state shared by both variants.
template <UnsignedWord W>
struct PassState {
  W delta{};                  // minimum of the interval being practiced
  W delta_next{};             // running minimum of the values beyond the interval
  std::size_t practiced = 0;  // n_d
  std::size_t idle = 0;       // n_c (modifiable variant only)
  std::size_t deferred = 0;   // n_d'
  std::size_t offset = 0;     // region start within the full sequence
  std::size_t len = 0;        // region length (the n of this pass)
};

}  // namespace assort
