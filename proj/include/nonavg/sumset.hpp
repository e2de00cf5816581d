#pragma once

#include <optional>
#include <set>
#include <vector>

#include "nonavg/bitvec.hpp"
#include "nonavg/budget.hpp"
#include "nonavg/intset.hpp"

namespace nonavg {

// The set of all subset sums of a generating list, 0 always included (empty
// subset). 1-D uses a dense bit vector over [min sum, max sum]; higher
// dimension a sorted tuple set.
class SumSet {
  public:
    // Sums of all subsets of the given vectors (all of dimension `dim`).
    static SumSet of_vectors(int dim, const std::vector<Point>& vecs, const Budget& budget = {});

    int dim() const { return dim_; }
    std::size_t size() const;
    bool contains(const Point& p) const;
    bool contains_value(Int v) const;  // dim-1 convenience

    // Elements in ascending lexicographic order.
    std::vector<Point> elements() const;

    Int offset() const { return offset_; }
    const BitVec& bits() const { return bits_; }
    const std::set<Point>& tuples() const { return elems_; }

  private:
    int dim_ = 1;
    // dim == 1 representation
    Int offset_ = 0;  // value of bit 0
    BitVec bits_;
    // dim > 1 representation
    std::set<Point> elems_;

    friend SumSet subset_sums(const IntSet&, const Budget&);
};

SumSet subset_sums(const IntSet& A, const Budget& budget = {});

// Smallest (lexicographic) common element distinct from zero, or nullopt.
std::optional<Point> sumsets_share_nonzero(const SumSet& s1, const SumSet& s2);

// Smallest lex-positive common element, or nullopt.
std::optional<Point> sumsets_first_positive_common(const SumSet& s1, const SumSet& s2);

}  // namespace nonavg
