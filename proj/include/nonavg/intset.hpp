#pragma once

#include <vector>

#include "nonavg/errors.hpp"
#include "nonavg/point.hpp"

namespace nonavg {

// A finite set of distinct lattice points, stored sorted (lexicographically),
// with its tight axis-aligned bounding box. Immutable after construction.
class IntSet {
  public:
    // Validates: dim >= 1, every point has length dim, points distinct.
    IntSet(int dim, std::vector<Point> points);

    static IntSet from_values(std::vector<Int> values);  // dim-1 convenience

    int dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& operator[](std::size_t i) const { return pts_[i]; }

    bool contains(const Point& p) const;

    // Tight bounding box; only valid for nonempty sets.
    const Box& box() const;

    // 1-D values, requires dim == 1.
    std::vector<Int> values() const;

    bool operator==(const IntSet& o) const { return dim_ == o.dim_ && pts_ == o.pts_; }

  private:
    int dim_;
    std::vector<Point> pts_;
    Box box_;
};

}  // namespace nonavg
