#pragma once

#include "sbv/nodes.hpp"
#include "sbv/rational.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace sbv::testing {

// n+1 distinct rational nodes in (0,1) over a random common denominator.
inline NodeSet<Rational> random_rational_nodes(std::mt19937_64& rng, std::size_t degree) {
    const std::size_t count = degree + 1;
    const unsigned long den =
        static_cast<unsigned long>(count + 2 + rng() % 397);
    std::set<unsigned long> nums;
    while (nums.size() < count) nums.insert(1 + rng() % (den - 1));
    std::vector<Rational> nodes;
    for (unsigned long p : nums)
        nodes.emplace_back(static_cast<long long>(p), static_cast<long long>(den));
    return NodeSet<Rational>(std::move(nodes));
}

inline std::vector<Rational> order16_nodes() {
    std::vector<Rational> n;
    for (const char* s : {"1/16", "1/13", "2/11", "3/13", "1/4", "7/18", "2/5", "4/9", "7/15",
                          "17/30", "15/26", "9/13", "7/10", "8/11", "5/6", "20/21"})
        n.push_back(Rational::parse(s));
    return n;
}

inline std::vector<Rational> order16_rhs() {
    std::vector<Rational> b;
    for (long long v : {12, -3, 0, 1, 5, -7, 0, 2, 21, -4, 0, 9, -11, 6, -8, 0})
        b.emplace_back(v);
    return b;
}

} // namespace sbv::testing
