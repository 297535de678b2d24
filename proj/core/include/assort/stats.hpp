#pragma once

#include <cstddef>
#include <vector>

namespace assort {

// Bookkeeping for one practice/store(/partition/retrieve) cycle.
struct PassSnapshot {
  std::size_t practiced = 0;  // n_d: distinct values settled by this pass
  std::size_t idle = 0;       // n_c: values absorbed into an existing node's record
  std::size_t deferred = 0;   // n_d': values beyond the interval, left for later passes
  std::size_t swaps = 0;      // effective swaps performed during the pass
};

struct SortStats {
  std::size_t passes = 0;  // k: iterations (or recursion depth)
  std::size_t swaps = 0;   // two-element exchanges, self-swaps excluded
  std::size_t moves = 0;   // one-way displacements (modifiable variant only)
  std::size_t reads = 0;   // element/key loads performed by the scans
  std::vector<PassSnapshot> per_pass;

  void merge(const SortStats& other) {
    passes += other.passes;
    swaps += other.swaps;
    moves += other.moves;
    reads += other.reads;
    per_pass.insert(per_pass.end(), other.per_pass.begin(), other.per_pass.end());
  }
};

}  // namespace assort
