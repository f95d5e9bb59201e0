#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// Matroid given by its explicit basis family over ground 0..n-1 (n <= 20).
struct ExplicitMatroid {
    int n = 0;
    std::string name;
    std::vector<std::uint32_t> bases;  // sorted, deduped

    int rank() const;
    bool is_basis(std::uint32_t q) const;
    bool independent(std::uint32_t q) const;  // extends to a basis
    // basis exchange axiom, asserted on construction-sized grounds
    bool exchange_axiom_holds() const;

    std::string serialize() const;
    static ExplicitMatroid parse(std::istream& in);
    static ExplicitMatroid mk4();     // cycle matroid of K4
    static ExplicitMatroid uniform(int r, int n);
    ExplicitMatroid restriction(std::uint32_t subset) const;  // reindexed to popcount(subset)
};

// ---- the instance matroids M1(D,w), M0(D,w) ----
// Ground set: active vertices. Constraints cached as (trace over ground, rhs):
// a set Q is a basis iff |Q| = disc(V) and |Q cap trace| >= rhs for all entries.
struct InstanceMatroid {
    std::vector<int> ground;  // active vertex ids, ascending
    long long target_size = 0;
    std::vector<std::pair<std::uint32_t, long long>> constraints;
    bool is_basis(std::uint32_t q) const;
    ExplicitMatroid explicit_matroid(const std::string& name) const;  // ground <= 20
};

// which = 1: |Q cap U| >= 1 + disc(U) over dicut shores of D;
// which = 0: |Q cap U| >= disc(U) over dicut shores of D[A1].
InstanceMatroid build_instance_matroid(const WeightedDigraph& d, int t, int which,
                                       std::size_t cap = 4000000);

// flow-backed basis tests, usable at any size (cross-checked vs the tables)
bool m1_is_basis_flow(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices);
bool m0_is_basis_flow(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices);

// m0 membership via bimatchability (perfect b-matching with b = 1 + chi_Q)
bool m0_is_basis_bimatch(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices);

// partition the ground set into k disjoint bases (matroid union augmenting with
// exhaustive fallback for n <= 15); empty optional = does not exist
std::optional<std::vector<std::uint32_t>> matroid_basis_partition(const ExplicitMatroid& m,
                                                                  int k);

bool is_strongly_base_orderable(const ExplicitMatroid& m);  // guard n <= 12
bool matroids_isomorphic(const ExplicitMatroid& a, const ExplicitMatroid& b);
bool is_mk4_restriction(const ExplicitMatroid& m, std::uint32_t subset);

// all symmetric exchange partners of u between bases b1, b2
std::vector<int> symmetric_exchange_partners(const ExplicitMatroid& m, std::uint32_t b1,
                                             std::uint32_t b2, int u);
int symmetric_exchange(const ExplicitMatroid& m, std::uint32_t b1, std::uint32_t b2, int u);

// 9-element repartition: given ground partitioned into three bases, return a
// partition into three bases with a pair-union restriction that is not M(K4)
// (and verified strongly base orderable).
struct Mk4FreePair {
    std::vector<std::uint32_t> parts;  // three bases
    int i = -1, j = -1;                // the SBO pair-union
};
Mk4FreePair find_mk4_free_pair(const ExplicitMatroid& m,
                               const std::vector<std::uint32_t>& seed_parts);

// Davies-McDiarmid realized as guaranteed-success backtracking.
std::optional<std::vector<std::uint32_t>> common_base_partition_sbo(const ExplicitMatroid& m0,
                                                                    const ExplicitMatroid& m1,
                                                                    int k);

// admissibility over active vertex id sets
bool is_admissible(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices);
bool is_k_admissible(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices, int k);

}  // namespace dipack
