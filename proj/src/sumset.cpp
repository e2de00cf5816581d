#include "nonavg/sumset.hpp"

#include <algorithm>
#include <string>

namespace nonavg {

namespace {

// Range of reachable subset sums of 1-D vectors: [sum of negatives, sum of positives].
std::pair<Int, Int> sum_range(const std::vector<Point>& vecs) {
    Int lo = 0, hi = 0;
    for (const Point& v : vecs) {
        if (v[0] < 0)
            lo = checked_add(lo, v[0]);
        else
            hi = checked_add(hi, v[0]);
    }
    return {lo, hi};
}

}  // namespace

SumSet SumSet::of_vectors(int dim, const std::vector<Point>& vecs, const Budget& budget) {
    if (dim < 1) throw InvalidInput("SumSet dimension must be >= 1");
    for (const Point& v : vecs)
        if (static_cast<int>(v.size()) != dim)
            throw DimensionMismatch("sum vector length does not match dimension");
    SumSet s;
    s.dim_ = dim;
    if (dim == 1) {
        auto [lo, hi] = sum_range(vecs);
        Int cells = checked_add(checked_sub(hi, lo), 1);
        if (cells > budget.max_sum_range)
            throw BudgetError("subset-sum range " + std::to_string(cells) + " exceeds budget " +
                              std::to_string(budget.max_sum_range));
        s.offset_ = lo;
        s.bits_ = BitVec(static_cast<std::size_t>(cells));
        s.bits_.set(static_cast<std::size_t>(-lo));
        for (const Point& v : vecs) s.bits_.or_shift_self(static_cast<std::ptrdiff_t>(v[0]));
    } else {
        s.elems_.insert(Point(dim, 0));
        for (const Point& v : vecs) {
            std::vector<Point> shifted;
            shifted.reserve(s.elems_.size());
            for (const Point& e : s.elems_) shifted.push_back(point_add(e, v));
            for (Point& p : shifted) s.elems_.insert(std::move(p));
            if (static_cast<std::int64_t>(s.elems_.size()) > budget.max_tuples)
                throw BudgetError("subset-sum tuple count exceeds budget " +
                                  std::to_string(budget.max_tuples));
        }
    }
    return s;
}

SumSet subset_sums(const IntSet& A, const Budget& budget) {
    return SumSet::of_vectors(A.dim(), A.points(), budget);
}

std::size_t SumSet::size() const { return dim_ == 1 ? bits_.count() : elems_.size(); }

bool SumSet::contains_value(Int v) const {
    if (dim_ != 1) throw DimensionMismatch("contains_value requires dim 1");
    if (v < offset_) return false;
    Int idx = v - offset_;
    if (idx >= static_cast<Int>(bits_.size())) return false;
    return bits_.test(static_cast<std::size_t>(idx));
}

bool SumSet::contains(const Point& p) const {
    if (static_cast<int>(p.size()) != dim_) throw DimensionMismatch("element dimension mismatch");
    if (dim_ == 1) return contains_value(p[0]);
    return elems_.count(p) > 0;
}

std::vector<Point> SumSet::elements() const {
    std::vector<Point> out;
    if (dim_ == 1) {
        for (std::size_t i = bits_.find_next(0); i != BitVec::npos; i = bits_.find_next(i + 1))
            out.push_back(Point{offset_ + static_cast<Int>(i)});
    } else {
        out.assign(elems_.begin(), elems_.end());
    }
    return out;
}

namespace {

template <class Pred>
std::optional<Point> first_common(const SumSet& s1, const SumSet& s2, Pred keep) {
    if (s1.dim() != s2.dim()) throw DimensionMismatch("sumset dimensions differ");
    if (s1.dim() == 1) {
        Int lo = std::max(s1.offset(), s2.offset());
        Int hi1 = s1.offset() + static_cast<Int>(s1.bits().size()) - 1;
        Int hi2 = s2.offset() + static_cast<Int>(s2.bits().size()) - 1;
        Int hi = std::min(hi1, hi2);
        for (Int base = lo; base <= hi; base += 64) {
            std::uint64_t w = s1.bits().window(static_cast<std::size_t>(base - s1.offset())) &
                              s2.bits().window(static_cast<std::size_t>(base - s2.offset()));
            while (w) {
                Int v = base + __builtin_ctzll(w);
                if (v > hi) break;
                if (keep(Point{v})) return Point{v};
                w &= w - 1;
            }
        }
        return std::nullopt;
    }
    const auto& a = s1.tuples();
    const auto& b = s2.tuples();
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else {
            if (keep(*it)) return *it;
            ++it;
            ++jt;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Point> sumsets_share_nonzero(const SumSet& s1, const SumSet& s2) {
    return first_common(s1, s2, [](const Point& p) { return !point_is_zero(p); });
}

std::optional<Point> sumsets_first_positive_common(const SumSet& s1, const SumSet& s2) {
    return first_common(s1, s2, [](const Point& p) { return point_is_lex_positive(p); });
}

}  // namespace nonavg
