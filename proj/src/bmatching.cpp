#include "dipack/bmatching.hpp"

#include <numeric>
#include <stdexcept>

#include "dipack/maxflow.hpp"

namespace dipack {

BMatchingResult perfect_b_matching(const WeightedDigraph& d, const std::vector<long long>& b) {
    int n = d.num_vertices();
    if ((int)b.size() != n) throw std::invalid_argument("b size mismatch");
    std::vector<int> outd(n, 0), ind(n, 0);
    for (const Arc& a : d.arcs()) {
        outd[a.tail]++;
        ind[a.head]++;
    }
    long long bs = 0, bt = 0;
    for (int v = 0; v < n; v++) {
        if (outd[v] > 0 && ind[v] > 0)
            throw std::invalid_argument("perfect_b_matching needs a bipartite digraph");
        if (outd[v] + ind[v] == 0) throw std::invalid_argument("isolated vertex");
        (outd[v] > 0 ? bs : bt) += b[v];
    }
    BMatchingResult res;
    if (bs != bt) {
        res.balance_violated = true;
        return res;
    }
    int S = n, T = n + 1;
    MaxFlow mf(n + 2);
    std::vector<int> arc_edge(d.num_arcs());
    for (int v = 0; v < n; v++) {
        if (outd[v] > 0)
            mf.add_edge(S, v, b[v]);
        else
            mf.add_edge(v, T, b[v]);
    }
    for (int i = 0; i < d.num_arcs(); i++)
        arc_edge[i] = mf.add_edge(d.arc(i).tail, d.arc(i).head, MaxFlow::INF);
    long long f = mf.run(S, T);
    if (f == bs) {
        res.exists = true;
        res.x.resize(d.num_arcs());
        for (int i = 0; i < d.num_arcs(); i++) res.x[i] = mf.flow_on(arc_edge[i]);
        return res;
    }
    // violating shore: the complement of the residual-reachable side
    std::vector<char> reach = mf.min_cut_side(S);
    res.violating_shore.assign(n, 0);
    for (int v = 0; v < n; v++) res.violating_shore[v] = !reach[v];
    return res;
}

std::optional<std::vector<char>> degree_constrained_subgraph(
    int n, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& side,
    const std::vector<int>& lo, const std::vector<int>& hi) {
    for (int v = 0; v < n; v++)
        if (lo[v] > hi[v]) return std::nullopt;
    int S = n, T = n + 1, SS = n + 2, TT = n + 3;
    MaxFlow mf(n + 4);
    std::vector<long long> excess(n + 2, 0);
    // arc (a->b) with bounds [l,c] becomes (a->b, c-l); excess[b] += l, excess[a] -= l
    for (int v = 0; v < n; v++) {
        if (!side[v]) {
            mf.add_edge(S, v, hi[v] - lo[v]);
            excess[v] += lo[v];
            excess[S] -= lo[v];
        } else {
            mf.add_edge(v, T, hi[v] - lo[v]);
            excess[T] += lo[v];
            excess[v] -= lo[v];
        }
    }
    std::vector<int> edge_id(edges.size());
    for (size_t i = 0; i < edges.size(); i++) {
        auto [u, v] = edges[i];
        if (side[u] == side[v]) throw std::invalid_argument("edge within one side");
        int a = side[u] ? v : u, bb = side[u] ? u : v;
        edge_id[i] = mf.add_edge(a, bb, 1);
    }
    mf.add_edge(T, S, MaxFlow::INF);
    long long need = 0;
    for (int v = 0; v < n + 2; v++) {
        if (excess[v] > 0) {
            mf.add_edge(SS, v, excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            mf.add_edge(v, TT, -excess[v]);
        }
    }
    long long f = mf.run(SS, TT);
    if (f != need) return std::nullopt;
    std::vector<char> pick(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); i++) pick[i] = mf.flow_on(edge_id[i]) > 0;
    return pick;
}

}  // namespace dipack
