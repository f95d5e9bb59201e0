#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dipack/digraph.hpp"
#include "dipack/shores.hpp"

namespace dipack::testutil {

// brute-force shores: all nonempty proper subsets with no entering arc
inline std::vector<std::uint64_t> brute_shores(const WeightedDigraph& d) {
    int n = d.num_vertices();
    std::vector<std::uint64_t> out;
    for (std::uint64_t U = 1; U + 1 < (std::uint64_t(1) << n); U++) {
        bool ok = true;
        for (const Arc& a : d.arcs())
            if (((U >> a.head) & 1) && !((U >> a.tail) & 1)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(U);
    }
    return out;
}

inline WeightedDigraph k33() {
    WeightedDigraph d(6, "k33");
    for (int s = 0; s < 3; s++)
        for (int t = 3; t < 6; t++) d.add_arc(s, t, 1);
    return d;
}

inline WeightedDigraph directed_cycle(int n) {
    WeightedDigraph d(n, "cycle");
    for (int v = 0; v < n; v++) d.add_arc(v, (v + 1) % n, 1);
    return d;
}

inline WeightedDigraph path(int n) {
    WeightedDigraph d(n, "path");
    for (int v = 0; v + 1 < n; v++) d.add_arc(v, v + 1, 1);
    return d;
}

inline WeightedDigraph random_digraph(std::mt19937& rng, int n, int m,
                                      int max_w = 1) {
    WeightedDigraph d(n, "rand");
    std::uniform_int_distribution<int> dv(0, n - 1), dw(0, max_w);
    int tries = 0;
    while (d.num_arcs() < m && tries < 50 * m) {
        tries++;
        int t = dv(rng), h = dv(rng);
        if (t == h) continue;
        d.add_arc(t, h, max_w == 1 ? 1 : dw(rng));
    }
    return d;
}

// random sink-regular weighted (tau,tau+1)-bipartite instance, w in {0,1}:
// s sources (tau*rho_target of them active with degree tau+1), s+rho_target sinks
// of degree tau; extra weight-0 arcs optional. Returns digraph with unit weights
// on the structural arcs. Retries until every dicut has weight >= tau.
inline std::optional<WeightedDigraph> random_sink_regular(std::mt19937& rng, int tau_v,
                                                          int rho_target, int extra_sources,
                                                          int zero_arcs = 0) {
    int nsrc = tau_v * rho_target + extra_sources;
    int nsink = nsrc + rho_target;
    int n = nsrc + nsink;
    if (n > 24) return std::nullopt;
    std::vector<int> slots;
    for (int s = 0; s < nsrc; s++) {
        int deg = (s < tau_v * rho_target) ? tau_v + 1 : tau_v;
        for (int k = 0; k < deg; k++) slots.push_back(s);
    }
    if ((int)slots.size() != nsink * tau_v) return std::nullopt;
    std::shuffle(slots.begin(), slots.end(), rng);
    WeightedDigraph d(n, "rand_sink_regular");
    for (int t = 0; t < nsink; t++)
        for (int k = 0; k < tau_v; k++) d.add_arc(slots[t * tau_v + k], nsrc + t, 1);
    for (int z = 0; z < zero_arcs; z++) {
        std::uniform_int_distribution<int> ds(0, nsrc - 1), dt(0, nsink - 1);
        d.add_arc(ds(rng), nsrc + dt(rng), 0);
    }
    if (!d.connected_underlying()) return std::nullopt;
    auto t = tau(d);
    if (!t || *t != tau_v) return std::nullopt;
    auto cls = classify_bipartite(d, tau_v);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular) return std::nullopt;
    return d;
}

}  // namespace dipack::testutil
