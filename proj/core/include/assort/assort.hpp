#pragma once

// In-place associative sorting for distinct integer keys: a read-only-key
// variant driven by the identity hash key - delta, and a modifiable-integer
// variant that packs collided values into tagged bit-mask records and sorts
// intervals of r*n values per pass. Baseline sorts, workload generators and a
// pass-count predictor round out the toolkit.

#include "assort/baselines.hpp"
#include "assort/error.hpp"
#include "assort/layout.hpp"
#include "assort/modifiable.hpp"
#include "assort/readonly.hpp"
#include "assort/stats.hpp"
#include "assort/types.hpp"
#include "assort/word_traits.hpp"
#include "assort/workload.hpp"
