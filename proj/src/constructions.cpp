#include "nonavg/constructions.hpp"

#include <string>

#include "nonavg/errors.hpp"
#include "nonavg/verify.hpp"

namespace nonavg {

Construction bosznay(Int q) {
    if (q < 2) throw InvalidInput("bosznay requires q >= 2");
    const Int q3 = checked_mul(checked_mul(q, q), q);
    std::vector<Int> vals;
    vals.reserve(static_cast<std::size_t>(q - 1));
    for (Int i = 1; i <= q - 1; ++i) {
        Int tri = checked_mul(i, checked_add(i, 1)) / 2;
        vals.push_back(checked_add(checked_mul(i, q3), tri));
    }
    Construction c{IntSet::from_values(vals), {}};
    c.meta.name = "bosznay";
    c.meta.params = {{"q", std::to_string(q)}};
    c.meta.claimed_box = Box{{1}, {checked_mul(q3, q)}};
    c.meta.claimed_size = q - 1;
    return c;
}

Construction paraboloid(int d, Int m, const Budget& budget) {
    if (d < 2) throw InvalidInput("paraboloid requires d >= 2");
    if (m < 1) throw InvalidInput("paraboloid requires m >= 1");
    Int count = 1;
    for (int i = 0; i < d - 1; ++i) {
        count = checked_mul(count, m);
        if (count > budget.max_tuples)
            throw BudgetError("paraboloid point count exceeds budget");
    }
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    Point x(d - 1, 1);
    while (true) {
        Point p(d);
        Int norm2 = 0;
        for (int i = 0; i < d - 1; ++i) {
            p[i] = x[i];
            norm2 = checked_add(norm2, checked_mul(x[i], x[i]));
        }
        p[d - 1] = norm2;
        pts.push_back(std::move(p));
        int axis = d - 2;
        while (axis >= 0 && x[axis] == m) x[axis--] = 1;
        if (axis < 0) break;
        ++x[axis];
    }
    Construction c{IntSet(d, std::move(pts)), {}};
    c.meta.name = "paraboloid";
    c.meta.params = {{"d", std::to_string(d)}, {"m", std::to_string(m)}};
    Point lo(d, 1), hi(d, m);
    lo[d - 1] = d - 1;
    hi[d - 1] = checked_mul(static_cast<Int>(d - 1), checked_mul(m, m));
    c.meta.claimed_box = Box{std::move(lo), std::move(hi)};
    c.meta.claimed_size = count;
    return c;
}

namespace {

// floor(c * sqrt(n)) for rational c = p/q >= 0: floor(isqrt(p^2 n) / q).
Int floor_c_sqrt(Int n, const Rat& c) {
    BigInt p = c.get_num(), q = c.get_den();
    BigInt t = p * p * n;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return bigint_to_int(s / q);
}

}  // namespace

ConstructionPair straus_pair(Int n, const Rat& c) {
    if (n < 10) throw InvalidInput("straus_pair requires n >= 10");
    if (c <= 0 || c > 1) throw InvalidInput("straus_pair requires c in (0, 1]");
    const Int k = floor_c_sqrt(n, c);
    if (k < 1) throw InvalidInput("floor(c*sqrt(n)) must be >= 1");
    std::vector<Int> v1, v2;
    for (Int i = 1; i <= k; ++i) v1.push_back(i);
    for (Int i = checked_sub(n, k); i <= n; ++i) v2.push_back(i);
    ConstructionPair out{IntSet::from_values(v1), IntSet::from_values(v2), {}};
    out.meta.name = "straus_pair";
    out.meta.params = {{"n", std::to_string(n)}, {"c", rat_to_string(c)}};
    out.meta.claimed_box = Box{{1}, {n}};
    out.meta.claimed_size = checked_add(k, checked_add(k, 1));
    // max subset sum of [k] must stay below the second interval
    out.meta.condition_ok = checked_mul(k, checked_add(k, 1)) / 2 < checked_sub(n, k);
    return out;
}

std::pair<IntSet, IntSet> split_to_disjoint_pair(const IntSet& A, bool verify_input,
                                                 const Budget& budget) {
    if (A.dim() != 1) throw DimensionMismatch("split_to_disjoint_pair requires a 1-D set");
    const std::size_t m = A.size();
    if (m < 3) throw InvalidInput("split_to_disjoint_pair requires |A| >= 3");
    if (verify_input && !is_non_averaging(A, budget))
        throw InvalidInput("split_to_disjoint_pair input is not non-averaging");
    const std::vector<Int> a = A.values();  // IntSet keeps points sorted distinct
    const std::size_t piv = (m + 1) / 2;    // 1-based ceil(m/2)
    const Int ap = a[piv - 1];
    std::vector<Int> b1, b2;
    for (std::size_t i = 0; i + 1 < piv; ++i) b1.push_back(checked_sub(ap, a[i]));
    for (std::size_t j = piv; j < m; ++j) b2.push_back(checked_sub(a[j], ap));
    return {IntSet::from_values(b1), IntSet::from_values(b2)};
}

}  // namespace nonavg
