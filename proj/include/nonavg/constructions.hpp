#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nonavg/budget.hpp"
#include "nonavg/intset.hpp"
#include "nonavg/rational.hpp"

namespace nonavg {

struct ConstructionMeta {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Box claimed_box;
    Int claimed_size = 0;
    bool condition_ok = true;  // sufficiency condition for pair constructions
};

struct Construction {
    IntSet set;
    ConstructionMeta meta;
};

struct ConstructionPair {
    IntSet first, second;
    ConstructionMeta meta;
};

// {i*q^3 + i*(i+1)/2 : 1 <= i <= q-1}, a set of q-1 integers inside [1, q^4].
Construction bosznay(Int q);

// {(x, |x|_2^2) : x in [m]^{d-1}}, m^{d-1} points in d dimensions.
Construction paraboloid(int d, Int m, const Budget& budget = {});

// The interval pair [k] and [n-k, n] with k = floor(c*sqrt(n)). Their subset
// sums share only 0 whenever k(k+1)/2 < n-k; condition_ok records that check.
ConstructionPair straus_pair(Int n, const Rat& c = Rat(1));

// From a sorted non-averaging A = {a_1 < ... < a_m}, m >= 3, the pivot
// p = ceil(m/2) gives B1 = {a_p - a_i : i < p} and B2 = {a_j - a_p : j > p},
// whose subset sums intersect only at 0.
std::pair<IntSet, IntSet> split_to_disjoint_pair(const IntSet& A, bool verify_input = false,
                                                 const Budget& budget = {});

}  // namespace nonavg
