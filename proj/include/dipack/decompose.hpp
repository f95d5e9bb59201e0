#pragma once

#include <optional>
#include <vector>

#include "dipack/digraph.hpp"
#include "dipack/gadget.hpp"

namespace dipack {

// Pseudo-cut-vertex: deleting it creates a dicut of weight 0 (empty cuts across
// disconnected parts count).
struct PseudoCutWitness {
    int vertex = -1;
    std::vector<char> shore;  // U1' over the original vertex ids (vertex excluded)
};
std::optional<PseudoCutWitness> find_pseudo_cut_vertex(const WeightedDigraph& d);

struct SplitResult {
    WeightedDigraph d1, d2;
    std::vector<int> arcs1, arcs2;  // piece arc -> original arc index
};
SplitResult split_at_pseudo_cut_vertex(const WeightedDigraph& d, const PseudoCutWitness& w);

struct DecompositionForest {
    std::vector<WeightedDigraph> pieces;          // all irreducible
    std::vector<std::vector<int>> arc_provenance;  // piece arc -> original arc
};
DecompositionForest decompose(const WeightedDigraph& d);

// Lifting an irreducible weighted digraph to a weighted (tau,tau+1)-bipartite
// digraph by replacing each vertex that is not a degree-tau pure source/sink
// (or that carries nonzero ell) with a gadget. Internally works on the
// replication to 0/1 weights.
struct LiftResult {
    WeightedDigraph lifted;
    std::vector<int> old_arcs;               // indices in `lifted` of replicated input arcs
    std::vector<int> old_arc_provenance;     // same length: original input arc index
    std::vector<int> vertex_origin;          // lifted vertex -> input vertex (gadget block)
    std::vector<std::pair<double, double>> coords;
    int tau = 0;
};
LiftResult lift(const WeightedDigraph& d, int t, const std::vector<long long>& ell_plus,
                const std::vector<long long>& ell_minus, bool check_irreducible = true,
                bool validate_output = true);

enum class LiftMode { sink_regular, balanced };

struct DecomposeAndLift {
    DecompositionForest forest;
    std::vector<LiftResult> lifts;  // one per piece
};
DecomposeAndLift decompose_and_lift(const WeightedDigraph& d, int t, LiftMode mode);

// unweighted variants; lifting needs tau >= 3 so the result replicates to all-ones
DecompositionForest decompose_unweighted(const WeightedDigraph& d);
DecomposeAndLift decompose_and_lift_unweighted(const WeightedDigraph& d, int t, LiftMode mode);

// packing transports
std::vector<std::vector<int>> transport_from_lift(const LiftResult& lr,
                                                  const std::vector<std::vector<int>>& packing);
std::vector<std::vector<int>> transport_from_forest(
    const WeightedDigraph& original, const DecompositionForest& forest,
    const std::vector<std::vector<std::vector<int>>>& piece_packings);

}  // namespace dipack
