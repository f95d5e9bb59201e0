#include "dipack/shoremin.hpp"

#include <algorithm>

#include "dipack/maxflow.hpp"

namespace dipack {

std::optional<ShoreMinResult> closure_min(const WeightedDigraph& d,
                                          const std::vector<long long>& h,
                                          const std::vector<int>& forced_in,
                                          const std::vector<int>& forced_out) {
    int n = d.num_vertices();
    // maximize p(U) = -h(U) over in-closed U: p>0 gain nodes, p<0 cost nodes,
    // prerequisite edge v->u (cap INF) for every arc (u,v): v in U requires u in U.
    int S = n, T = n + 1;
    MaxFlow mf(n + 2);
    long long gain = 0;
    for (int v = 0; v < n; v++) {
        long long p = -h[v];
        if (p > 0) {
            mf.add_edge(S, v, p);
            gain += p;
        } else if (p < 0) {
            mf.add_edge(v, T, -p);
        }
    }
    for (const Arc& a : d.arcs()) mf.add_edge(a.head, a.tail, MaxFlow::INF);
    for (int v : forced_in) mf.add_edge(S, v, MaxFlow::INF);
    for (int v : forced_out) mf.add_edge(v, T, MaxFlow::INF);
    long long cut = mf.run(S, T);
    if (cut >= MaxFlow::INF / 2) return std::nullopt;  // forced sets conflict
    std::vector<char> side = mf.min_cut_side(S);
    ShoreMinResult r;
    r.shore.assign(n, 0);
    for (int v = 0; v < n; v++) r.shore[v] = side[v];
    r.value = cut - gain;  // = min h(U)
    return r;
}

std::optional<ShoreMinResult> shore_min_modular(const WeightedDigraph& d,
                                                const std::vector<long long>& h) {
    int n = d.num_vertices();
    if (n < 2) return std::nullopt;
    std::optional<ShoreMinResult> best;
    // proper shores containing 0: force 0 in, each u out; shores avoiding 0:
    // force each v in, 0 out. Covers every nonempty proper shore.
    for (int u = 1; u < n; u++) {
        auto r = closure_min(d, h, {0}, {u});
        if (r && (!best || r->value < best->value)) best = r;
    }
    for (int v = 1; v < n; v++) {
        auto r = closure_min(d, h, {v}, {0});
        if (r && (!best || r->value < best->value)) best = r;
    }
    return best;
}

std::optional<long long> min_dicut_weight_flow(const WeightedDigraph& d) {
    std::vector<long long> h(d.num_vertices(), 0);
    for (const Arc& a : d.arcs()) {
        h[a.tail] += a.weight;
        h[a.head] -= a.weight;
    }
    auto r = shore_min_modular(d, h);
    if (!r) return std::nullopt;
    return r->value;
}

}  // namespace dipack
