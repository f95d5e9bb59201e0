#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// A dicut shore: nonempty proper U with no entering arc. Within a connected
// digraph the shore determines the dicut uniquely.
struct Dicut {
    std::uint64_t shore = 0;       // vertex mask (n <= 64 for enumeration)
    std::vector<int> arcs;         // delta^+(U), ascending arc indices
};

struct EnumCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// strongly connected components; comp[v] in 0..k-1, reverse topological-ish ids
std::vector<int> scc_components(const WeightedDigraph& d, int* num_comps);

// All dicut shores as vertex masks (down-sets of the condensation that are
// closed under predecessors), excluding empty/full. Guarded by `cap` on the
// number of shores and by n <= 64.
std::vector<std::uint64_t> enumerate_dicut_shores(const WeightedDigraph& d,
                                                  std::size_t cap = 4000000);

std::vector<int> out_cut(const WeightedDigraph& d, std::uint64_t shore);
std::vector<int> in_cut(const WeightedDigraph& d, std::uint64_t shore);
long long cut_weight(const WeightedDigraph& d, std::uint64_t shore);

// arc-index masks of all dicuts, pruned to the inclusion-minimal ones
// (requires num_arcs <= 64)
std::vector<std::uint64_t> minimal_dicut_masks(const WeightedDigraph& d,
                                               std::size_t cap = 4000000);

// minimum weight of a dicut; nullopt = no dicut exists (+infinity)
std::optional<long long> tau(const WeightedDigraph& d, std::size_t cap = 4000000);

// (1/t)*sum_v ((w(delta+(v)) - w(delta-(v))) mod t), mod representative in 0..t-1
long long rho(int t, const WeightedDigraph& d);
long long rho_bar(int t, const WeightedDigraph& d);

// ---- bipartite classification ----
struct BipartiteClassification {
    std::vector<int> sources, sinks;      // vertex ids
    std::vector<int> active, inactive;    // weighted degree tau+1 / tau
    bool is_bipartite = false;            // every vertex a source or a sink
    bool is_weighted_tau_bipartite = false;
    bool is_sink_regular = false;
    bool is_balanced = false;
    std::vector<std::string> diagnostics;
};
BipartiteClassification classify_bipartite(const WeightedDigraph& d, int t);

// discrepancy: #sinks(U) - #sources(U); requires every vertex source or sink
long long discrepancy(const WeightedDigraph& d, std::uint64_t shore);
std::vector<int> discrepancy_vector(const WeightedDigraph& d);  // +1 sink, -1 source

// J a k-dijoin? k=1 uses strong connectivity of D/J; k>=2 uses the flow route
// (min over shores of |J cap delta+(U)|), cross-checked by enumeration in tests.
bool is_dijoin(const WeightedDigraph& d, const std::vector<int>& j_arcs);
bool is_k_dijoin(const WeightedDigraph& d, const std::vector<int>& j_arcs, int k);
// exact min over dicut shores of |J cap delta+(U)|; nullopt if no dicut
std::optional<long long> min_dicut_coverage(const WeightedDigraph& d,
                                            const std::vector<int>& j_arcs);

// greedy minimal dijoin, deleting arcs in ascending index order
std::vector<int> find_minimal_dijoin(const WeightedDigraph& d);

}  // namespace dipack
