#pragma once

#include <cstdint>
#include <vector>

#include "nonavg/budget.hpp"
#include "nonavg/intset.hpp"

namespace nonavg {

struct SearchResult {
    Int optimum = 0;
    std::vector<Point> witness;  // canonical: lex-smallest among maximum sets
    std::uint64_t nodes = 0;     // explored nodes; timing-dependent under parallelism
    double wall_ms = 0;
};

// Exact maximum size of a non-averaging subset of [1, n], with the
// lexicographically smallest maximum witness. Branch-and-bound over elements
// in increasing order; with workers > 1, root branches are distributed and
// the result is identical to the single-threaded run.
SearchResult h_exact(Int n, int workers = 1, const Budget& budget = {});

std::vector<SearchResult> h_table(Int n_max, int workers = 1, const Budget& budget = {});

// Exact maximum non-averaging subset of the box [1,dims_1] x ... x [1,dims_d].
SearchResult max_non_averaging_box(const std::vector<Int>& dims, const Budget& budget = {});

struct PairSearchResult {
    Int optimum = 0;
    std::vector<Int> first, second;  // canonical witness pair
    std::uint64_t nodes = 0;
    double wall_ms = 0;
};

// Exact H(n): the largest s for which two (ordered, possibly equal) subsets
// of [n] of size s have subset-sum sets meeting only at 0.
PairSearchResult H_exact(Int n, const Budget& budget = {});

// Computed h(n) <= 2 H(n) + 2; a false return indicates a defect here, not
// in the mathematics.
bool check_h_le_2H_plus_2(Int n, const Budget& budget = {});

}  // namespace nonavg
