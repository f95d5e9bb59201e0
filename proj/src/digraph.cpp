#include "dipack/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dipack {

bool WeightedDigraph::connected_underlying() const {
    if (n_ <= 1) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const Arc& a : arcs_) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                cnt++;
                stack.push_back(u);
            }
    }
    return cnt == n_;
}

Replication replicate_weights(const WeightedDigraph& d) {
    Replication r;
    r.digraph = WeightedDigraph(d.num_vertices(), d.name());
    r.replicas.resize(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); i++) {
        const Arc& a = d.arc(i);
        if (a.weight == 0) {
            int j = r.digraph.add_arc(a.tail, a.head, 0);
            r.provenance.push_back(i);
            r.replicas[i].push_back(j);
        } else {
            for (long long k = 0; k < a.weight; k++) {
                int j = r.digraph.add_arc(a.tail, a.head, 1);
                r.provenance.push_back(i);
                r.replicas[i].push_back(j);
            }
        }
    }
    return r;
}

WeightedDigraph reverse(const WeightedDigraph& d) {
    WeightedDigraph r(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs()) r.add_arc(a.head, a.tail, a.weight);
    return r;
}

ArcDeletion delete_arcs(const WeightedDigraph& d, const std::vector<int>& del) {
    std::vector<char> gone(d.num_arcs(), 0);
    for (int i : del) gone.at(i) = 1;
    ArcDeletion out;
    out.digraph = WeightedDigraph(d.num_vertices(), d.name());
    out.old_to_new.assign(d.num_arcs(), -1);
    for (int i = 0; i < d.num_arcs(); i++) {
        if (gone[i]) continue;
        const Arc& a = d.arc(i);
        out.old_to_new[i] = out.digraph.add_arc(a.tail, a.head, a.weight);
    }
    return out;
}

Contraction contract_arcs(const WeightedDigraph& d, const std::vector<int>& con) {
    int n = d.num_vertices();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int i : con) {
        const Arc& a = d.arc(i);
        uf[find(a.tail)] = find(a.head);
    }
    std::vector<int> rep(n, -1);
    int m = 0;
    std::vector<int> vmap(n);
    for (int v = 0; v < n; v++) {
        int r = find(v);
        if (rep[r] < 0) rep[r] = m++;
        vmap[v] = rep[r];
    }
    Contraction out;
    out.vertex_map = vmap;
    out.digraph = WeightedDigraph(m, d.name());
    out.old_to_new.assign(d.num_arcs(), -1);
    std::vector<char> gone(d.num_arcs(), 0);
    for (int i : con) gone[i] = 1;
    for (int i = 0; i < d.num_arcs(); i++) {
        if (gone[i]) continue;
        const Arc& a = d.arc(i);
        int t = vmap[a.tail], h = vmap[a.head];
        if (t == h) continue;  // loop created by contraction, dropped
        out.old_to_new[i] = out.digraph.add_arc(t, h, a.weight);
    }
    return out;
}

Contraction identify_vertices(const WeightedDigraph& d, const std::vector<char>& in_set) {
    int n = d.num_vertices();
    Contraction out;
    out.vertex_map.assign(n, -1);
    int m = 0;
    int merged = -1;
    for (int v = 0; v < n; v++) {
        if (in_set[v]) {
            if (merged < 0) merged = m++;
            out.vertex_map[v] = merged;
        } else {
            out.vertex_map[v] = m++;
        }
    }
    out.digraph = WeightedDigraph(m, d.name());
    out.old_to_new.assign(d.num_arcs(), -1);
    for (int i = 0; i < d.num_arcs(); i++) {
        const Arc& a = d.arc(i);
        int t = out.vertex_map[a.tail], h = out.vertex_map[a.head];
        if (t == h) continue;
        out.old_to_new[i] = out.digraph.add_arc(t, h, a.weight);
    }
    return out;
}

}  // namespace dipack
