#pragma once

#include <optional>
#include <vector>

#include "nonavg/budget.hpp"
#include "nonavg/intset.hpp"

namespace nonavg {

// Certificate that `center` equals the exact average of `subset`:
// |subset| * center == sum(subset), coordinate-wise; center not in subset.
struct AveragingWitness {
    Point center;
    std::vector<Point> subset;  // sorted, nonempty

    bool check() const;
};

// Witness that A fails to be non-averaging, or nullopt when A is
// non-averaging. Reduction: for each a, search a nonempty zero-sum subset of
// {b - a : b in A \ {a}}. Canonical output: lexicographically minimal
// (center, sorted subset).
std::optional<AveragingWitness> averaging_witness(const IntSet& A, const Budget& budget = {});

inline bool is_non_averaging(const IntSet& A, const Budget& budget = {}) {
    return !averaging_witness(A, budget).has_value();
}

// A violation of the disjoint-subset-sum criterion: a center a, disjoint
// parts A1, A2 of A \ {a}, and a nonzero element shared by the sum sets of
// A1 - a and a - A2.
struct CriterionViolation {
    Point center;
    std::vector<Point> part1, part2;
    Point common;
};

// Nullopt iff for every a and every pair of disjoint A1, A2 in A \ {a}, the
// sets of subset sums of A1 - a and a - A2 meet only at 0. Violations come in
// mirror pairs (A1,A2,c)/(A2,A1,-c); the one with lex-positive common element
// is reported, minimal in (center, part1, part2) order.
std::optional<CriterionViolation> erdos_straus_violation(const IntSet& A,
                                                         const Budget& budget = {});

}  // namespace nonavg
