#include "nonavg/intset.hpp"

#include <algorithm>

namespace nonavg {

IntSet::IntSet(int dim, std::vector<Point> points) : dim_(dim), pts_(std::move(points)) {
    if (dim_ < 1) throw InvalidInput("IntSet dimension must be >= 1");
    for (const Point& p : pts_)
        if (static_cast<int>(p.size()) != dim_)
            throw DimensionMismatch("point length does not match set dimension");
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw InvalidInput("IntSet points must be distinct");
    if (!pts_.empty()) {
        box_.lo = box_.hi = pts_[0];
        for (const Point& p : pts_)
            for (int i = 0; i < dim_; ++i) {
                box_.lo[i] = std::min(box_.lo[i], p[i]);
                box_.hi[i] = std::max(box_.hi[i], p[i]);
            }
    }
}

IntSet IntSet::from_values(std::vector<Int> values) {
    std::vector<Point> pts;
    pts.reserve(values.size());
    for (Int v : values) pts.push_back(Point{v});
    return IntSet(1, std::move(pts));
}

bool IntSet::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

const Box& IntSet::box() const {
    if (pts_.empty()) throw InvalidInput("bounding box of an empty set");
    return box_;
}

std::vector<Int> IntSet::values() const {
    if (dim_ != 1) throw DimensionMismatch("values() requires a 1-D set");
    std::vector<Int> v;
    v.reserve(pts_.size());
    for (const Point& p : pts_) v.push_back(p[0]);
    return v;
}

}  // namespace nonavg
