#include "nonavg/search.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include "nonavg/bitvec.hpp"
#include "nonavg/errors.hpp"
#include "nonavg/sumset.hpp"

namespace nonavg {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1-D engine. For the current partial set A we keep, per a in A, the bit set
// D_a = { sum of S - a over nonempty S subset A\{a} }, over the fixed range
// [-T, T], T = n(n+1)/2. Appending x is allowed iff
//   (1) no nonempty S subset A has sum(S - x) = 0, and
//   (2) for every a in A, (a - x) is not in D_a
// which together say A + {x} stays non-averaging given A was.
// ---------------------------------------------------------------------------
class LineSearcher {
  public:
    LineSearcher(Int n, std::atomic<Int>& best_size)
        : n_(n), T_(n * (n + 1) / 2), best_size_(best_size) {}

    // Explore all extensions of the chained prefix {x0}; assumes prefix valid.
    void run_root(Int x0) {
        chosen_.clear();
        stores_.clear();
        undo_.clear();
        undo_marks_.clear();
        push(x0, sums_of_diffs(x0));
        dfs();
        pop();
    }

    Int champion_size() const { return champion_size_; }
    const std::vector<Int>& champion() const { return champion_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::size_t bit_of(Int v) const { return static_cast<std::size_t>(v + T_); }

    // D_x for candidate x given the current chain: nonempty subset sums of
    // {s - x : s in chain}.
    BitVec sums_of_diffs(Int x) const {
        BitVec b(static_cast<std::size_t>(2 * T_ + 1));
        for (Int s : chosen_) {
            b.or_shift_self(static_cast<std::ptrdiff_t>(s - x));
            b.set(bit_of(s - x));
        }
        return b;
    }

    bool feasible(Int x, const BitVec& dx) const {
        if (dx.test(bit_of(0))) return false;
        for (std::size_t i = 0; i < chosen_.size(); ++i)
            if (stores_[i].test(bit_of(chosen_[i] - x))) return false;
        return true;
    }

    void push(Int x, BitVec dx) {
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            undo_.emplace_back(i, stores_[i]);
            stores_[i].or_shift_self(static_cast<std::ptrdiff_t>(x - chosen_[i]));
            stores_[i].set(bit_of(x - chosen_[i]));
        }
        undo_marks_.push_back(undo_.size() - chosen_.size());
        chosen_.push_back(x);
        stores_.push_back(std::move(dx));
    }

    void pop() {
        chosen_.pop_back();
        stores_.pop_back();
        std::size_t mark = undo_marks_.back();
        undo_marks_.pop_back();
        while (undo_.size() > mark) {
            auto& [i, saved] = undo_.back();
            stores_[i] = std::move(saved);
            undo_.pop_back();
        }
    }

    void dfs() {
        ++nodes_;
        const Int size = static_cast<Int>(chosen_.size());
        if (size > champion_size_ ||
            (size == champion_size_ && chosen_ < champion_)) {
            champion_size_ = size;
            champion_ = chosen_;
            Int prev = best_size_.load(std::memory_order_relaxed);
            while (prev < size &&
                   !best_size_.compare_exchange_weak(prev, size, std::memory_order_relaxed)) {
            }
        }
        for (Int x = chosen_.back() + 1; x <= n_; ++x) {
            // strict-< bound: subtrees that cannot reach best+0 still matter
            // for canonical tie-breaks, only strictly hopeless ones are cut
            if (size + (n_ - x + 1) < best_size_.load(std::memory_order_relaxed)) break;
            BitVec dx = sums_of_diffs(x);
            if (!feasible(x, dx)) continue;
            push(x, std::move(dx));
            dfs();
            pop();
        }
    }

    Int n_, T_;
    std::atomic<Int>& best_size_;
    std::vector<Int> chosen_;
    std::vector<BitVec> stores_;
    std::vector<std::pair<std::size_t, BitVec>> undo_;
    std::vector<std::size_t> undo_marks_;
    Int champion_size_ = 0;
    std::vector<Int> champion_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult h_exact(Int n, int workers, const Budget& budget) {
    if (n < 1) throw InvalidInput("h_exact requires n >= 1");
    if (n > budget.max_h_n)
        throw BudgetError("h_exact limited to n <= " + std::to_string(budget.max_h_n));
    if (workers < 1) workers = 1;
    const auto t0 = Clock::now();

    std::atomic<Int> best_size{0};
    std::vector<Int> roots;
    for (Int x = 1; x <= n; ++x) roots.push_back(x);

    struct Local {
        Int size = 0;
        std::vector<Int> witness;
        std::uint64_t nodes = 0;
    };
    std::vector<Local> locals(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next_root{0};

    auto work = [&](int w) {
        LineSearcher searcher(n, best_size);
        while (true) {
            std::size_t i = next_root.fetch_add(1);
            if (i >= roots.size()) break;
            searcher.run_root(roots[i]);
        }
        locals[static_cast<std::size_t>(w)] = {searcher.champion_size(), searcher.champion(),
                                               searcher.nodes()};
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    Int best = 0;
    std::vector<Int> witness;
    for (const Local& l : locals) {
        res.nodes += l.nodes;
        if (l.size > best || (l.size == best && l.size > 0 && l.witness < witness)) {
            best = l.size;
            witness = l.witness;
        }
    }
    res.optimum = best;
    for (Int v : witness) res.witness.push_back(Point{v});
    res.wall_ms = ms_since(t0);
    return res;
}

std::vector<SearchResult> h_table(Int n_max, int workers, const Budget& budget) {
    if (n_max < 1) throw InvalidInput("h_table requires n_max >= 1");
    std::vector<SearchResult> out;
    for (Int n = 1; n <= n_max; ++n) out.push_back(h_exact(n, workers, budget));
    return out;
}

SearchResult max_non_averaging_box(const std::vector<Int>& dims, const Budget& budget) {
    if (dims.empty()) throw InvalidInput("box dimensions must be nonempty");
    for (Int d : dims)
        if (d < 1) throw InvalidInput("box dimensions must be positive");
    Int cells = 1;
    for (Int d : dims) cells = checked_mul(cells, d);
    if (cells > budget.max_box_cells)
        throw BudgetError("box search limited to " + std::to_string(budget.max_box_cells) +
                          " cells");
    const auto t0 = Clock::now();
    const int dim = static_cast<int>(dims.size());

    std::vector<Point> grid;
    Point x(dim, 1);
    while (true) {
        grid.push_back(x);
        int axis = dim - 1;
        while (axis >= 0 && x[axis] == dims[static_cast<std::size_t>(axis)]) x[axis--] = 1;
        if (axis < 0) break;
        ++x[axis];
    }
    // grid generated in row-major order == lex order

    std::vector<Point> chosen;
    std::vector<std::set<Point>> stores;  // D_a per chosen element
    std::vector<std::vector<std::pair<std::size_t, Point>>> undo;

    auto sums_of_diffs = [&](const Point& p) {
        std::set<Point> s;
        for (const Point& c : chosen) {
            Point d = point_sub(c, p);
            std::vector<Point> add;
            add.push_back(d);
            for (const Point& e : s) add.push_back(point_add(e, d));
            for (Point& q : add) s.insert(std::move(q));
        }
        return s;
    };

    auto feasible = [&](const Point& p, const std::set<Point>& dp) {
        if (dp.count(Point(dim, 0))) return false;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            if (stores[i].count(point_sub(chosen[i], p))) return false;
        return true;
    };

    auto push = [&](std::size_t gi, std::set<Point> dp) {
        const Point& p = grid[gi];
        undo.emplace_back();
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            Point d = point_sub(p, chosen[i]);
            std::vector<Point> add;
            add.push_back(d);
            for (const Point& e : stores[i]) add.push_back(point_add(e, d));
            for (Point& q : add)
                if (stores[i].insert(q).second) undo.back().emplace_back(i, q);
        }
        chosen.push_back(p);
        stores.push_back(std::move(dp));
    };

    auto pop = [&]() {
        chosen.pop_back();
        stores.pop_back();
        for (auto& [i, q] : undo.back()) stores[i].erase(q);
        undo.pop_back();
    };

    SearchResult res;
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        ++nodes;
        const Int size = static_cast<Int>(chosen.size());
        if (size > res.optimum || (size == res.optimum && chosen < res.witness)) {
            res.optimum = size;
            res.witness = chosen;
        }
        for (std::size_t gi = next; gi < grid.size(); ++gi) {
            if (size + static_cast<Int>(grid.size() - gi) < res.optimum) break;
            auto dp = sums_of_diffs(grid[gi]);
            if (!feasible(grid[gi], dp)) continue;
            push(gi, std::move(dp));
            self(self, gi + 1);
            pop();
        }
    };
    dfs(dfs, 0);
    res.nodes = nodes;
    res.wall_ms = ms_since(t0);
    return res;
}

namespace {

// Subset-sum bit sets of [1, n] indexed by bit mask over {1..n}.
std::vector<BitVec> all_mask_sumsets(Int n) {
    const std::size_t total = static_cast<std::size_t>(1) << n;
    const std::size_t nb = static_cast<std::size_t>(n * (n + 1) / 2 + 1);
    std::vector<BitVec> out(total, BitVec(nb));
    out[0].set(0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int low = __builtin_ctzll(mask);
        out[mask] = out[mask & (mask - 1)];
        out[mask].or_shift_self(low + 1);
    }
    return out;
}

bool share_only_zero(const BitVec& a, const BitVec& b) {
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        std::uint64_t w = wa[i] & wb[i];
        if (i == 0) w &= ~std::uint64_t(1);  // both always contain the empty sum
        if (w) return false;
    }
    return true;
}

// Size-s subsets of {1..n} as masks, in lex order of their sorted content.
void for_each_combination(Int n, Int s, const std::function<bool(std::uint64_t)>& visit);

void combo_rec(Int n, Int s, Int start, std::uint64_t mask, bool& stop,
               const std::function<bool(std::uint64_t)>& visit) {
    if (stop) return;
    if (s == 0) {
        stop = visit(mask);
        return;
    }
    for (Int v = start; v + s - 1 <= n; ++v)
        combo_rec(n, s - 1, v + 1, mask | (std::uint64_t(1) << (v - 1)), stop, visit);
}

void for_each_combination(Int n, Int s, const std::function<bool(std::uint64_t)>& visit) {
    bool stop = false;
    combo_rec(n, s, 1, 0, stop, visit);
}

}  // namespace

PairSearchResult H_exact(Int n, const Budget& budget) {
    if (n < 1) throw InvalidInput("H_exact requires n >= 1");
    if (n > budget.max_H_n)
        throw BudgetError("H_exact limited to n <= " + std::to_string(budget.max_H_n));
    const auto t0 = Clock::now();
    auto sums = all_mask_sumsets(n);
    PairSearchResult res;
    std::uint64_t nodes = 0;
    auto values = [&](std::uint64_t mask) {
        std::vector<Int> v;
        for (Int i = 1; i <= n; ++i)
            if (mask & (std::uint64_t(1) << (i - 1))) v.push_back(i);
        return v;
    };
    for (Int s = n; s >= 1; --s) {
        bool found = false;
        for_each_combination(n, s, [&](std::uint64_t m1) {
            bool inner_found = false;
            for_each_combination(n, s, [&](std::uint64_t m2) {
                ++nodes;
                if (share_only_zero(sums[m1], sums[m2])) {
                    res.optimum = s;
                    res.first = values(m1);
                    res.second = values(m2);
                    inner_found = true;
                    return true;
                }
                return false;
            });
            found = inner_found;
            return inner_found;
        });
        if (found) break;
    }
    res.nodes = nodes;
    res.wall_ms = ms_since(t0);
    return res;
}

bool check_h_le_2H_plus_2(Int n, const Budget& budget) {
    SearchResult h = h_exact(n, 1, budget);
    PairSearchResult H = H_exact(n, budget);
    return h.optimum <= 2 * H.optimum + 2;
}

}  // namespace nonavg
