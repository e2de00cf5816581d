#pragma once

#include <cstdint>

#include "nonavg/checked.hpp"

namespace nonavg {

// Resource limits. Exceeding any of them raises BudgetError; there is no
// approximate fallback anywhere.
struct Budget {
    std::int64_t max_sum_range = 100'000'000;  // dense 1-D subset-sum cells
    std::int64_t max_tuples = 10'000'000;      // coordinate-keyed sum tuples / enumerated points
    int max_criterion_size = 12;               // |A| cap for the disjoint-pair criterion scan
    Int max_h_n = 64;                          // exact h(n) search cap
    Int max_H_n = 12;                          // exact H(n) pair search cap
    std::int64_t max_box_cells = 24;           // exact box search cap
    int zonotope_retries = 1000;               // randomized rounding retry cap
    int zonotope_fallback_size = 20;           // exhaustive fallback cap after retries
};

}  // namespace nonavg
