#include "nonavg/verify.hpp"

#include <algorithm>
#include <string>

#include "nonavg/errors.hpp"
#include "nonavg/sumset.hpp"
#include "nonavg/zerosum.hpp"

namespace nonavg {

bool AveragingWitness::check() const {
    if (subset.empty()) return false;
    for (const Point& b : subset)
        if (b == center) return false;
    Point sum(center.size(), 0);
    for (const Point& b : subset) sum = point_add(sum, b);
    return point_scale(static_cast<Int>(subset.size()), center) == sum;
}

std::optional<AveragingWitness> averaging_witness(const IntSet& A, const Budget& budget) {
    // Scanning centers in ascending order and taking the canonical zero-sum
    // witness per center yields the lex-minimal (center, subset) pair: the
    // shift b -> b - a preserves the order of sorted difference lists.
    for (const Point& a : A.points()) {
        std::vector<Point> diffs;
        diffs.reserve(A.size() - 1);
        for (const Point& b : A.points())
            if (b != a) diffs.push_back(point_sub(b, a));
        auto zs = zero_sum_subset(std::move(diffs), budget);
        if (!zs) continue;
        AveragingWitness w;
        w.center = a;
        for (const Point& d : *zs) w.subset.push_back(point_add(d, a));
        std::sort(w.subset.begin(), w.subset.end());
        return w;
    }
    return std::nullopt;
}

std::optional<CriterionViolation> erdos_straus_violation(const IntSet& A, const Budget& budget) {
    if (static_cast<int>(A.size()) > budget.max_criterion_size)
        throw BudgetError("criterion scan limited to |A| <= " +
                          std::to_string(budget.max_criterion_size));
    const int dim = A.dim();
    for (const Point& a : A.points()) {
        std::vector<Point> others;
        for (const Point& b : A.points())
            if (b != a) others.push_back(b);
        const std::size_t m = others.size();

        std::optional<CriterionViolation> hit;

        // Both parts are enumerated in lex order of their sorted content:
        // a subset is visited before any of its extensions by larger
        // elements, so the first hit is the minimal (center, part1, part2).
        std::vector<char> in1(m, 0);
        std::vector<std::size_t> idx1, idx2;
        std::vector<Point> diffs1, diffs2;

        auto scan_part2 = [&](const SumSet& s1) {
            auto rec2 = [&](auto&& self, std::size_t start) -> bool {
                if (!idx2.empty()) {
                    SumSet s2 = SumSet::of_vectors(dim, diffs2, budget);
                    if (auto common = sumsets_first_positive_common(s1, s2)) {
                        std::vector<Point> part1, part2;
                        for (auto i : idx1) part1.push_back(others[i]);
                        for (auto j : idx2) part2.push_back(others[j]);
                        hit = CriterionViolation{a, part1, part2, *common};
                        return true;
                    }
                }
                for (std::size_t j = start; j < m; ++j) {
                    if (in1[j]) continue;
                    idx2.push_back(j);
                    diffs2.push_back(point_sub(a, others[j]));
                    bool done = self(self, j + 1);
                    idx2.pop_back();
                    diffs2.pop_back();
                    if (done) return true;
                }
                return false;
            };
            return rec2(rec2, 0);
        };

        auto rec1 = [&](auto&& self, std::size_t start) -> bool {
            if (!idx1.empty()) {
                SumSet s1 = SumSet::of_vectors(dim, diffs1, budget);
                if (scan_part2(s1)) return true;
            }
            for (std::size_t i = start; i < m; ++i) {
                idx1.push_back(i);
                in1[i] = 1;
                diffs1.push_back(point_sub(others[i], a));
                bool done = self(self, i + 1);
                idx1.pop_back();
                in1[i] = 0;
                diffs1.pop_back();
                if (done) return true;
            }
            return false;
        };
        rec1(rec1, 0);
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace nonavg
