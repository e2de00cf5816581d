#pragma once

#include <vector>

#include "nonavg/checked.hpp"

namespace nonavg {

// A lattice point; comparisons are lexicographic (vector's built-in order).
using Point = std::vector<Int>;

inline Point point_add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline Point point_sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

inline Point point_neg(const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_neg(a[i]);
    return r;
}

inline Point point_scale(Int k, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
    return r;
}

inline bool point_is_zero(const Point& a) {
    for (Int c : a)
        if (c != 0) return false;
    return true;
}

// First nonzero coordinate is positive.
inline bool point_is_lex_positive(const Point& a) {
    for (Int c : a) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

// Axis-aligned integer box, per-coordinate closed bounds.
struct Box {
    Point lo, hi;

    bool contains(const Point& p) const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    // Number of lattice cells: product of per-axis widths.
    Int cells() const {
        Int n = 1;
        for (std::size_t i = 0; i < lo.size(); ++i)
            n = checked_mul(n, checked_add(checked_sub(hi[i], lo[i]), 1));
        return n;
    }
};

}  // namespace nonavg
