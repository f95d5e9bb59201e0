#pragma once

#include <string>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// One attachment slot of a gadget: does the original arc leave (+) or enter (-)
// the replaced vertex, and does it have weight 1 or 0.
struct SeqEntry {
    bool leaving = true;   // '+' vs '-'
    int weight = 1;        // 0 or 1
};

struct GadgetSpec {
    int tau = 2;
    std::vector<SeqEntry> seq;
    long long ell_plus = 0;
    long long ell_minus = 0;
};

struct GadgetResult {
    WeightedDigraph digraph;
    std::vector<int> phi;                       // seq position -> attachment vertex
    std::vector<std::pair<double, double>> coords;
    long long k = 0, k_prime = 0;
    std::vector<long long> n_parts, m_parts, f;  // internals as built
};

// Lemma-checked construction: weighted rectangle, rungs, added sources, added
// sinks, with the smallest k meeting the three feasibility conditions, and
// maximal interval sizes first.
GadgetResult build_gadget(const GadgetSpec& spec);

// All six post-conditions (degrees, dicut weight >= tau-1, counts of degree
// tau+1 / tau-1 vertices, attachment types); empty result = pass.
std::vector<std::string> check_gadget(const GadgetResult& g, const GadgetSpec& spec);

// tau = 3 only: replace every weight-2 arc by an all-unit sub-digraph; the
// result still satisfies the six clauses (re-checked by the caller's checker,
// not assumed).
GadgetResult tau3_simplify(const GadgetResult& g, const GadgetSpec& spec);

}  // namespace dipack
