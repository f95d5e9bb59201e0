#pragma once

#include <optional>
#include <vector>

#include "dipack/digraph.hpp"
#include "dipack/shores.hpp"

namespace dipack {

// Rounded 1-factor: |J cap delta(v)| is w(delta(v))/tau rounded up or down at
// every vertex; dyad centers are the vertices covered twice.
struct RoundedOneFactor {
    std::vector<int> arcs;          // arc indices, ascending
    std::vector<int> dyad_centers;  // vertex ids, ascending
};

// Partition the edge multiset of a bipartite (multi)graph into k parts whose
// per-vertex degrees are |delta(v)|/k rounded up or down. Any algorithm meeting
// the degree contract qualifies; here one balanced part is peeled at a time via
// a degree-constrained-subgraph flow.
std::vector<std::vector<int>> dewerra_partition(int n,
                                                const std::vector<std::pair<int, int>>& edges,
                                                const std::vector<char>& side, int k);

// Partition A1 = {a : w_a = 1} of a sink-regular weighted (tau,tau+1)-bipartite
// digraph into tau rounded 1-factors.
std::vector<RoundedOneFactor> rounded_one_factor_partition(const WeightedDigraph& d, int t);

bool is_rounded_one_factor(const WeightedDigraph& d, int t, const std::vector<int>& arcs);
std::vector<int> dyad_centers_of(const WeightedDigraph& d, const std::vector<int>& arcs);

// Alternating decomposition of J1 triangle J2 into a cycle part and paths
// joining dc(J1)-dc(J2) to dc(J2)-dc(J1).
struct AlternatingPath {
    std::vector<int> arcs;  // in walk order
    int from = -1;          // in dc(J1)-dc(J2)
    int to = -1;            // in dc(J2)-dc(J1)
};
struct AlternatingDecomposition {
    std::vector<int> cycle;              // arc-disjoint union of alternating circuits
    std::vector<AlternatingPath> paths;  // the bijection pi: from -> to
};
AlternatingDecomposition alternating_decomposition(const WeightedDigraph& d, int t,
                                                   const RoundedOneFactor& j1,
                                                   const RoundedOneFactor& j2);

// Swap a subset of the paths: J -> J triangle (triangle of chosen paths).
std::pair<RoundedOneFactor, RoundedOneFactor> apply_path_swap(
    const WeightedDigraph& d, const RoundedOneFactor& j1, const RoundedOneFactor& j2,
    const AlternatingDecomposition& alt, const std::vector<int>& chosen_paths);

// ---- packings ----
struct FactorPacking {
    std::vector<std::vector<int>> dijoins;  // arc index sets
    bool equitable = false;
};

// Theorem route for rho <= 1: every rounded-1-factor partition works.
FactorPacking equitable_packing_rho_le_1(const WeightedDigraph& d, int t);

// gcd of vertex imbalances; 0 when all imbalances vanish
long long imbalance_gcd(const WeightedDigraph& d);

// equitable on all inclusionwise-minimal dicuts
bool is_equitable(const WeightedDigraph& d, const std::vector<std::vector<int>>& packing,
                  std::size_t cap = 4000000);

// checks multiplicities <= w and each member a dijoin
bool is_weighted_packing(const WeightedDigraph& d, const std::vector<std::vector<int>>& packing);

}  // namespace dipack
