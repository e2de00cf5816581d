#include "nonavg/zerosum.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nonavg/bitvec.hpp"
#include "nonavg/errors.hpp"

namespace nonavg {

namespace {

// 1-D: dense suffix-reachability. R[i] = sums of (possibly empty) subsets of
// vecs[i..]. The greedy over sorted input then yields the lex-minimal witness:
// include the earliest element whose remaining target stays completable.
std::optional<std::vector<Point>> zero_sum_1d(const std::vector<Point>& vecs,
                                              const Budget& budget) {
    const std::size_t k = vecs.size();
    Int lo = 0, hi = 0;
    for (const Point& v : vecs) {
        if (v[0] < 0)
            lo = checked_add(lo, v[0]);
        else
            hi = checked_add(hi, v[0]);
    }
    const Int cells = checked_add(checked_sub(hi, lo), 1);
    if (cells > budget.max_sum_range)
        throw BudgetError("zero-sum range " + std::to_string(cells) + " exceeds budget " +
                          std::to_string(budget.max_sum_range));
    const auto nb = static_cast<std::size_t>(cells);
    const auto bit_of = [&](Int v) { return static_cast<std::size_t>(v - lo); };

    // Existence first: sums of nonempty subsets only.
    {
        BitVec ne(nb);
        for (const Point& v : vecs) {
            ne.or_shift_self(static_cast<std::ptrdiff_t>(v[0]));
            ne.set(bit_of(v[0]));
        }
        if (!ne.test(bit_of(0))) return std::nullopt;
    }

    if (checked_mul(cells, static_cast<Int>(k) + 1) > budget.max_sum_range)
        throw BudgetError("zero-sum witness reconstruction exceeds range budget");

    std::vector<BitVec> suffix(k + 1, BitVec(nb));
    suffix[k].set(bit_of(0));
    for (std::size_t i = k; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        suffix[i].or_shift_self(static_cast<std::ptrdiff_t>(vecs[i][0]));
    }

    std::vector<Point> witness;
    Int target = 0;
    std::size_t next = 0;
    do {
        bool advanced = false;
        for (std::size_t i = next; i < k; ++i) {
            Int rem = checked_sub(target, vecs[i][0]);
            if (rem >= lo && rem <= hi && suffix[i + 1].test(bit_of(rem))) {
                witness.push_back(vecs[i]);
                target = rem;
                next = i + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("zero-sum reconstruction lost the trail");
    } while (target != 0);
    return witness;
}

// d >= 2: tuple-keyed suffix-reachability sets.
std::optional<std::vector<Point>> zero_sum_nd(const std::vector<Point>& vecs, int dim,
                                              const Budget& budget) {
    const std::size_t k = vecs.size();
    const Point zero(dim, 0);

    std::int64_t stored = 0;
    auto grow = [&](std::set<Point>& s, Point p) {
        if (s.insert(std::move(p)).second && ++stored > budget.max_tuples)
            throw BudgetError("zero-sum tuple count exceeds budget " +
                              std::to_string(budget.max_tuples));
    };

    {
        std::set<Point> ne;
        std::vector<Point> add;
        for (const Point& v : vecs) {
            add.clear();
            add.push_back(v);
            for (const Point& e : ne) add.push_back(point_add(e, v));
            for (Point& p : add) grow(ne, std::move(p));
        }
        if (!ne.count(zero)) return std::nullopt;
    }

    stored = 0;
    std::vector<std::set<Point>> suffix(k + 1);
    suffix[k].insert(zero);
    stored = 1;
    for (std::size_t i = k; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        stored += static_cast<std::int64_t>(suffix[i].size());
        std::vector<Point> add;
        for (const Point& e : suffix[i + 1]) add.push_back(point_add(e, vecs[i]));
        for (Point& p : add) grow(suffix[i], std::move(p));
    }

    std::vector<Point> witness;
    Point target = zero;
    std::size_t next = 0;
    do {
        bool advanced = false;
        for (std::size_t i = next; i < k; ++i) {
            Point rem = point_sub(target, vecs[i]);
            if (suffix[i + 1].count(rem)) {
                witness.push_back(vecs[i]);
                target = std::move(rem);
                next = i + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("zero-sum reconstruction lost the trail");
    } while (!point_is_zero(target));
    return witness;
}

}  // namespace

std::optional<std::vector<Point>> zero_sum_subset(std::vector<Point> vecs, const Budget& budget) {
    if (vecs.empty()) return std::nullopt;
    const int dim = static_cast<int>(vecs[0].size());
    for (const Point& v : vecs) {
        if (static_cast<int>(v.size()) != dim)
            throw DimensionMismatch("mixed dimensions in zero-sum input");
        if (point_is_zero(v)) throw InvalidInput("zero vector in zero-sum input");
    }
    std::sort(vecs.begin(), vecs.end());
    if (dim == 1) return zero_sum_1d(vecs, budget);
    return zero_sum_nd(vecs, dim, budget);
}

}  // namespace nonavg
