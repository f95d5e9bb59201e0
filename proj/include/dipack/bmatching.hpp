#pragma once

#include <optional>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// Perfect b-matching in a bipartite digraph: x >= 0 integral with
// x(delta(v)) = b_v for every vertex. Exists iff b(S) = b(T) and
// b(U cap S) >= b(U cap T) on every dicut shore; on failure a violating
// shore is returned as certificate.
struct BMatchingResult {
    bool exists = false;
    std::vector<long long> x;             // per arc multiplicity (when exists)
    std::vector<char> violating_shore;    // witness when not
    bool balance_violated = false;        // b(S) != b(T)
};
BMatchingResult perfect_b_matching(const WeightedDigraph& d, const std::vector<long long>& b);

// Degree-constrained subgraph of a bipartite (multi)graph given by edges
// (u,v) over a bipartition classes[v] in {0,1}: pick E' with
// lo[v] <= deg_{E'}(v) <= hi[v]. Integral via flow with lower bounds.
std::optional<std::vector<char>> degree_constrained_subgraph(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& side,
    const std::vector<int>& lo, const std::vector<int>& hi);

}  // namespace dipack
