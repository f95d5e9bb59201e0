#include "dipack/shores.hpp"

#include <algorithm>
#include <cassert>

#include "dipack/shoremin.hpp"

namespace dipack {

std::vector<int> scc_components(const WeightedDigraph& d, int* num_comps) {
    int n = d.num_vertices();
    std::vector<std::vector<int>> adj(n);
    for (const Arc& a : d.arcs()) adj[a.tail].push_back(a.head);
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
    std::vector<char> on(n, 0);
    int idx = 0, nc = 0;
    // iterative tarjan
    for (int root = 0; root < n; root++) {
        if (num[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> call;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei == 0) {
                num[v] = low[v] = idx++;
                stk.push_back(v);
                on[v] = 1;
            }
            bool descended = false;
            while (ei < adj[v].size()) {
                int u = adj[v][ei++];
                if (num[u] < 0) {
                    call.push_back({u, 0});
                    descended = true;
                    break;
                } else if (on[u]) {
                    low[v] = std::min(low[v], num[u]);
                }
            }
            if (descended) continue;
            if (low[v] == num[v]) {
                while (true) {
                    int u = stk.back();
                    stk.pop_back();
                    on[u] = 0;
                    comp[u] = nc;
                    if (u == v) break;
                }
                nc++;
            }
            int vv = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
        }
    }
    if (num_comps) *num_comps = nc;
    return comp;
}

std::vector<std::uint64_t> enumerate_dicut_shores(const WeightedDigraph& d, std::size_t cap) {
    int n = d.num_vertices();
    if (n > 64) throw EnumCapExceeded("shore enumeration requires <= 64 vertices");
    if (n == 0) return {};
    int nc = 0;
    std::vector<int> comp = scc_components(d, &nc);
    std::vector<std::uint64_t> comp_mask(nc, 0);
    for (int v = 0; v < n; v++) comp_mask[comp[v]] |= std::uint64_t(1) << v;
    // predecessor lists in the condensation
    std::vector<std::vector<int>> preds(nc);
    {
        std::vector<std::pair<int, int>> seen;
        for (const Arc& a : d.arcs()) {
            int cu = comp[a.tail], cv = comp[a.head];
            if (cu != cv) preds[cv].push_back(cu);
        }
        for (auto& p : preds) {
            std::sort(p.begin(), p.end());
            p.erase(std::unique(p.begin(), p.end()), p.end());
        }
    }
    // topological order of components (preds before succs)
    std::vector<int> order, indeg(nc, 0);
    {
        std::vector<std::vector<int>> succ(nc);
        for (int c = 0; c < nc; c++)
            for (int p : preds[c]) {
                succ[p].push_back(c);
                indeg[c]++;
            }
        std::vector<int> q;
        for (int c = 0; c < nc; c++)
            if (indeg[c] == 0) q.push_back(c);
        for (size_t i = 0; i < q.size(); i++) {
            int c = q[i];
            order.push_back(c);
            for (int s : succ[c])
                if (--indeg[s] == 0) q.push_back(s);
        }
    }
    std::vector<int> pos(nc);
    for (int i = 0; i < nc; i++) pos[order[i]] = i;

    std::vector<std::uint64_t> shores;
    std::vector<char> in(nc, 0);
    // DFS over topo positions: include component (allowed iff all preds in) or skip
    std::vector<std::pair<int, int>> stack;  // (position, state 0=try-include,1=try-exclude,2=done)
    std::uint64_t cur = 0;

    // recursive lambda via explicit recursion over positions
    struct Rec {
        int nc;
        std::size_t cap;
        std::vector<int>& order;
        std::vector<std::vector<int>>& preds;
        std::vector<std::uint64_t>& comp_mask;
        std::vector<char> in;
        std::vector<std::uint64_t>& shores;
        std::uint64_t full;
        void go(int i, std::uint64_t cur, int cnt) {
            if (i == nc) {
                if (cnt > 0 && cnt < nc) {
                    if (shores.size() >= cap)
                        throw EnumCapExceeded("dicut shore cap exceeded");
                    shores.push_back(cur);
                }
                return;
            }
            int c = order[i];
            bool ok = true;
            for (int p : preds[c])
                if (!in[p]) {
                    ok = false;
                    break;
                }
            if (ok) {
                in[c] = 1;
                go(i + 1, cur | comp_mask[c], cnt + 1);
                in[c] = 0;
            }
            go(i + 1, cur, cnt);
        }
    };
    std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    Rec rec{nc, cap, order, preds, comp_mask, std::vector<char>(nc, 0), shores, full};
    rec.go(0, 0, 0);
    std::sort(shores.begin(), shores.end());
    return shores;
}

std::vector<int> out_cut(const WeightedDigraph& d, std::uint64_t shore) {
    std::vector<int> out;
    for (int i = 0; i < d.num_arcs(); i++) {
        const Arc& a = d.arc(i);
        if (((shore >> a.tail) & 1) && !((shore >> a.head) & 1)) out.push_back(i);
    }
    return out;
}

std::vector<int> in_cut(const WeightedDigraph& d, std::uint64_t shore) {
    std::vector<int> out;
    for (int i = 0; i < d.num_arcs(); i++) {
        const Arc& a = d.arc(i);
        if (!((shore >> a.tail) & 1) && ((shore >> a.head) & 1)) out.push_back(i);
    }
    return out;
}

long long cut_weight(const WeightedDigraph& d, std::uint64_t shore) {
    long long s = 0;
    for (const Arc& a : d.arcs())
        if (((shore >> a.tail) & 1) && !((shore >> a.head) & 1)) s += a.weight;
    return s;
}

std::vector<std::uint64_t> minimal_dicut_masks(const WeightedDigraph& d, std::size_t cap) {
    if (d.num_arcs() > 64) throw EnumCapExceeded("minimal_dicut_masks requires <= 64 arcs");
    auto shores = enumerate_dicut_shores(d, cap);
    std::vector<std::uint64_t> masks;
    masks.reserve(shores.size());
    for (std::uint64_t U : shores) {
        std::uint64_t m = 0;
        for (int i = 0; i < d.num_arcs(); i++) {
            const Arc& a = d.arc(i);
            if (((U >> a.tail) & 1) && !((U >> a.head) & 1)) m |= std::uint64_t(1) << i;
        }
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t m : masks) {
        bool dominated = false;
        for (std::uint64_t k : minimal)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(m);
    }
    return minimal;
}

std::optional<long long> tau(const WeightedDigraph& d, std::size_t cap) {
    auto shores = enumerate_dicut_shores(d, cap);
    if (shores.empty()) return std::nullopt;
    long long best = -1;
    for (std::uint64_t U : shores) {
        long long w = cut_weight(d, U);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

static long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long rho(int t, const WeightedDigraph& d) {
    if (t < 2) throw std::invalid_argument("rho requires tau >= 2");
    long long tot = 0;
    for (int v = 0; v < d.num_vertices(); v++) tot += pos_mod(d.imbalance(v), t);
    assert(tot % t == 0);
    return tot / t;
}

long long rho_bar(int t, const WeightedDigraph& d) { return rho(t, reverse(d)); }

BipartiteClassification classify_bipartite(const WeightedDigraph& d, int t) {
    BipartiteClassification c;
    c.is_bipartite = true;
    int n = d.num_vertices();
    std::vector<long long> outd(n, 0), ind(n, 0);
    for (const Arc& a : d.arcs()) {
        outd[a.tail] += a.weight;
        ind[a.head] += a.weight;
    }
    std::vector<int> out_arcs(n, 0), in_arcs(n, 0);
    for (const Arc& a : d.arcs()) {
        out_arcs[a.tail]++;
        in_arcs[a.head]++;
    }
    bool degrees_ok = true;
    for (int v = 0; v < n; v++) {
        if (out_arcs[v] > 0 && in_arcs[v] > 0) {
            c.is_bipartite = false;
            c.diagnostics.push_back("vertex " + std::to_string(v) + " has both in and out arcs");
            continue;
        }
        if (out_arcs[v] == 0 && in_arcs[v] == 0) {
            c.is_bipartite = false;
            c.diagnostics.push_back("vertex " + std::to_string(v) + " is isolated");
            continue;
        }
        if (out_arcs[v] > 0)
            c.sources.push_back(v);
        else
            c.sinks.push_back(v);
        long long deg = outd[v] + ind[v];
        if (deg == t + 1)
            c.active.push_back(v);
        else if (deg == t)
            c.inactive.push_back(v);
        else {
            degrees_ok = false;
            c.diagnostics.push_back("vertex " + std::to_string(v) + " weighted degree " +
                                    std::to_string(deg) + " not in {tau,tau+1}");
        }
    }
    bool stable = true;
    if (c.is_bipartite) {
        std::vector<char> act(n, 0);
        for (int v : c.active) act[v] = 1;
        for (const Arc& a : d.arcs())
            if (act[a.tail] && act[a.head]) {
                stable = false;
                c.diagnostics.push_back("active vertices adjacent via arc " +
                                        std::to_string(a.tail) + "->" + std::to_string(a.head));
                break;
            }
    }
    bool dicuts_ok = true;
    if (c.is_bipartite && degrees_ok) {
        auto mind = min_dicut_weight_flow(d);
        if (mind && *mind < t) {
            dicuts_ok = false;
            c.diagnostics.push_back("a dicut of weight " + std::to_string(*mind) +
                                    " < tau exists");
        }
    }
    c.is_weighted_tau_bipartite = c.is_bipartite && degrees_ok && stable && dicuts_ok;
    if (c.is_weighted_tau_bipartite) {
        c.is_sink_regular = true;
        for (int v : c.sinks)
            if (outd[v] + ind[v] != t) c.is_sink_regular = false;
        c.is_balanced = c.sources.size() == c.sinks.size();
    }
    return c;
}

std::vector<int> discrepancy_vector(const WeightedDigraph& d) {
    int n = d.num_vertices();
    std::vector<int> out_arcs(n, 0), in_arcs(n, 0);
    for (const Arc& a : d.arcs()) {
        out_arcs[a.tail]++;
        in_arcs[a.head]++;
    }
    std::vector<int> disc(n, 0);
    for (int v = 0; v < n; v++) {
        if (out_arcs[v] > 0 && in_arcs[v] > 0)
            throw std::invalid_argument("discrepancy needs a bipartite digraph");
        if (out_arcs[v] + in_arcs[v] == 0)
            throw std::invalid_argument("discrepancy: isolated vertex");
        disc[v] = out_arcs[v] > 0 ? -1 : +1;
    }
    return disc;
}

long long discrepancy(const WeightedDigraph& d, std::uint64_t shore) {
    auto disc = discrepancy_vector(d);
    long long s = 0;
    for (int v = 0; v < d.num_vertices(); v++)
        if ((shore >> v) & 1) s += disc[v];
    return s;
}

bool is_dijoin(const WeightedDigraph& d, const std::vector<int>& j_arcs) {
    Contraction c = contract_arcs(d, j_arcs);
    if (c.digraph.num_vertices() <= 1) return true;
    int nc = 0;
    scc_components(c.digraph, &nc);
    return nc == 1;
}

std::optional<long long> min_dicut_coverage(const WeightedDigraph& d,
                                            const std::vector<int>& j_arcs) {
    std::vector<long long> h(d.num_vertices(), 0);
    for (int i : j_arcs) {
        h[d.arc(i).tail] += 1;
        h[d.arc(i).head] -= 1;
    }
    auto r = shore_min_modular(d, h);
    if (!r) return std::nullopt;
    return r->value;
}

bool is_k_dijoin(const WeightedDigraph& d, const std::vector<int>& j_arcs, int k) {
    if (k <= 0) return true;
    if (k == 1) return is_dijoin(d, j_arcs);
    auto m = min_dicut_coverage(d, j_arcs);
    return !m || *m >= k;
}

std::vector<int> find_minimal_dijoin(const WeightedDigraph& d) {
    std::vector<int> all(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); i++) all[i] = i;
    if (!is_dijoin(d, all))
        throw std::invalid_argument("no dijoin exists (underlying graph disconnected)");
    std::vector<char> in(d.num_arcs(), 1);
    for (int i = 0; i < d.num_arcs(); i++) {
        in[i] = 0;
        std::vector<int> j;
        for (int a = 0; a < d.num_arcs(); a++)
            if (in[a]) j.push_back(a);
        if (!is_dijoin(d, j)) in[i] = 1;
    }
    std::vector<int> j;
    for (int a = 0; a < d.num_arcs(); a++)
        if (in[a]) j.push_back(a);
    return j;
}

}  // namespace dipack
