#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipack/digraph.hpp"
#include "dipack/io.hpp"

namespace dipack {

struct VerificationReport {
    std::string claim;
    bool ok = false;
    std::string detail;  // witness or search-space counter
};

// Exhaustive w-weighted packing search (k dijoins, optionally equitable).
// Non-equitable mode branches on an uncovered minimal dicut with the fewest
// available arcs; equitable mode labels every weight-1 arc (guarded).
// Independent of the pipeline: uses only dicut enumeration and direct checks.
std::optional<std::vector<std::vector<int>>> exhaustive_pack_search(
    const WeightedDigraph& d, int k, bool equitable, long long* nodes = nullptr,
    long long node_cap = 200000000);

// Partition `pool` into k dijoins of d, or prove none exists by exhaustion.
std::optional<std::vector<std::vector<int>>> exhaustive_partition_search(
    const WeightedDigraph& d, const std::vector<int>& pool, int k, long long* nodes = nullptr,
    long long node_cap = 200000000);

// maximum packing size, by exhaustion from above (small instances)
int exhaustive_nu(const WeightedDigraph& d, int upper, long long* nodes = nullptr);

// run the instance's declared claim list; deep claims (exhaustive searches)
// only when `deep` is set
std::vector<VerificationReport> validate_instance_claims(const Instance& inst, bool deep);

// load + gate: shallow claims always, deep on request; throws on failure
Instance load_validated(const std::string& name_or_path, bool deep = false);

}  // namespace dipack
