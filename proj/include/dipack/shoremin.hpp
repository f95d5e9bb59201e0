#pragma once

#include <optional>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// Minimize a modular vertex function h over dicut shores (nonempty proper
// in-closed vertex sets) via max-closure / min-cut. Works at any instance size;
// cross-validated against shore enumeration in tests. On shores,
// sum_{v in U} (w_out(v) - w_in(v)) equals w(delta+(U)), so dicut weights,
// dicut coverage counts and the matroid constraint forms are all reachable
// through this one primitive.
struct ShoreMinResult {
    long long value;
    std::vector<char> shore;
};

// min over in-closed U with forced_in subset of U and forced_out disjoint from U.
// Returns nullopt when no such closed set exists (forced sets conflict).
std::optional<ShoreMinResult> closure_min(const WeightedDigraph& d,
                                          const std::vector<long long>& h,
                                          const std::vector<int>& forced_in,
                                          const std::vector<int>& forced_out);

// min over nonempty proper shores; nullopt if the digraph has no dicut shore.
std::optional<ShoreMinResult> shore_min_modular(const WeightedDigraph& d,
                                                const std::vector<long long>& h);

// min dicut weight by the flow route (exact at any size)
std::optional<long long> min_dicut_weight_flow(const WeightedDigraph& d);

}  // namespace dipack
