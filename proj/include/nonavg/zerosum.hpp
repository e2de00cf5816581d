#pragma once

#include <optional>
#include <vector>

#include "nonavg/budget.hpp"
#include "nonavg/point.hpp"

namespace nonavg {

// Nonempty sub-multiset of `vecs` summing to the zero vector, if any.
// The returned witness is canonical: lexicographically minimal as a sorted
// list of vectors. Zero vectors in the input are rejected.
std::optional<std::vector<Point>> zero_sum_subset(std::vector<Point> vecs,
                                                  const Budget& budget = {});

}  // namespace nonavg
