#include "dipack/factor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "dipack/bmatching.hpp"

namespace dipack {

std::vector<std::vector<int>> dewerra_partition(int n,
                                                const std::vector<std::pair<int, int>>& edges,
                                                const std::vector<char>& side, int k) {
    if (k < 1) throw std::invalid_argument("k >= 1 required");
    for (auto [u, v] : edges)
        if (side[u] == side[v]) throw std::invalid_argument("non-bipartite input");
    std::vector<std::vector<int>> parts;
    std::vector<int> remaining(edges.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    int kr = k;
    while (kr > 1) {
        std::vector<int> deg(n, 0);
        for (int e : remaining) {
            deg[edges[e].first]++;
            deg[edges[e].second]++;
        }
        std::vector<int> lo(n), hi(n);
        for (int v = 0; v < n; v++) {
            lo[v] = deg[v] / kr;
            hi[v] = (deg[v] + kr - 1) / kr;
        }
        std::vector<std::pair<int, int>> sub;
        sub.reserve(remaining.size());
        for (int e : remaining) sub.push_back(edges[e]);
        auto pick = degree_constrained_subgraph(n, sub, side, lo, hi);
        if (!pick) throw std::runtime_error("balanced part peel failed (internal)");
        std::vector<int> part, rest;
        for (size_t i = 0; i < sub.size(); i++)
            (pick->at(i) ? part : rest).push_back(remaining[i]);
        parts.push_back(std::move(part));
        remaining = std::move(rest);
        kr--;
    }
    parts.push_back(std::move(remaining));
    return parts;
}

std::vector<RoundedOneFactor> rounded_one_factor_partition(const WeightedDigraph& d, int t) {
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("rounded_one_factor_partition needs a sink-regular instance");
    for (const Arc& a : d.arcs())
        if (a.weight > 1) throw std::invalid_argument("weights must be 0/1 (replicate first)");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> arc_of_edge;
    for (int i = 0; i < d.num_arcs(); i++)
        if (d.arc(i).weight == 1) {
            edges.push_back({d.arc(i).tail, d.arc(i).head});
            arc_of_edge.push_back(i);
        }
    std::vector<char> side(d.num_vertices(), 0);
    for (int v : cls.sinks) side[v] = 1;
    auto parts = dewerra_partition(d.num_vertices(), edges, side, t);
    std::vector<RoundedOneFactor> out;
    for (auto& p : parts) {
        RoundedOneFactor f;
        for (int e : p) f.arcs.push_back(arc_of_edge[e]);
        std::sort(f.arcs.begin(), f.arcs.end());
        f.dyad_centers = dyad_centers_of(d, f.arcs);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> dyad_centers_of(const WeightedDigraph& d, const std::vector<int>& arcs) {
    std::vector<int> cnt(d.num_vertices(), 0);
    for (int i : arcs) {
        cnt[d.arc(i).tail]++;
        cnt[d.arc(i).head]++;
    }
    std::vector<int> out;
    for (int v = 0; v < d.num_vertices(); v++)
        if (cnt[v] == 2) out.push_back(v);
    return out;
}

bool is_rounded_one_factor(const WeightedDigraph& d, int t, const std::vector<int>& arcs) {
    std::vector<int> cnt(d.num_vertices(), 0);
    for (int i : arcs) {
        cnt[d.arc(i).tail]++;
        cnt[d.arc(i).head]++;
    }
    for (int v = 0; v < d.num_vertices(); v++) {
        long long wd = d.weighted_degree(v);
        long long lo = wd / t, hi = (wd + t - 1) / t;
        if (cnt[v] < lo || cnt[v] > hi) return false;
    }
    return true;
}

AlternatingDecomposition alternating_decomposition(const WeightedDigraph& d, int t,
                                                   const RoundedOneFactor& j1,
                                                   const RoundedOneFactor& j2) {
    if (!is_rounded_one_factor(d, t, j1.arcs) || !is_rounded_one_factor(d, t, j2.arcs))
        throw std::invalid_argument("inputs are not rounded 1-factors");
    int n = d.num_vertices();
    std::vector<char> in1(d.num_arcs(), 0), in2(d.num_arcs(), 0);
    for (int i : j1.arcs) in1[i] = 1;
    for (int i : j2.arcs) in2[i] = 1;
    // D': arcs of J1-J2 keep direction, arcs of J2-J1 reversed; walks alternate
    // factors automatically (out-arcs of a source are J1, of a sink are J2).
    std::vector<std::vector<std::pair<int, int>>> out(n);  // (target, arc)
    for (int i = 0; i < d.num_arcs(); i++) {
        if (in1[i] && !in2[i]) out[d.arc(i).tail].push_back({d.arc(i).head, i});
        if (in2[i] && !in1[i]) out[d.arc(i).head].push_back({d.arc(i).tail, i});
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    std::vector<size_t> it(n, 0);
    std::vector<char> used(d.num_arcs(), 0);

    std::vector<int> q1 = j1.dyad_centers, q2 = j2.dyad_centers;
    std::vector<int> starts;
    for (int v : q1)
        if (!std::binary_search(q2.begin(), q2.end(), v)) starts.push_back(v);

    AlternatingDecomposition alt;
    auto walk_from = [&](int v, std::vector<int>& arcs_out) -> int {
        while (true) {
            auto& lst = out[v];
            while (it[v] < lst.size() && used[lst[it[v]].second]) it[v]++;
            if (it[v] >= lst.size()) return v;
            auto [u, a] = lst[it[v]];
            used[a] = 1;
            arcs_out.push_back(a);
            v = u;
        }
    };
    for (int s : starts) {
        AlternatingPath p;
        p.from = s;
        p.to = walk_from(s, p.arcs);
        assert(!p.arcs.empty());
        alt.paths.push_back(std::move(p));
    }
    // remaining arcs decompose into closed walks: the alternating cycle part
    for (int v = 0; v < n; v++) {
        std::vector<int> dummy;
        int end = walk_from(v, dummy);
        (void)end;
        for (int a : dummy) alt.cycle.push_back(a);
    }
    std::sort(alt.cycle.begin(), alt.cycle.end());
    return alt;
}

std::pair<RoundedOneFactor, RoundedOneFactor> apply_path_swap(
    const WeightedDigraph& d, const RoundedOneFactor& j1, const RoundedOneFactor& j2,
    const AlternatingDecomposition& alt, const std::vector<int>& chosen_paths) {
    std::vector<char> in1(d.num_arcs(), 0), in2(d.num_arcs(), 0);
    for (int i : j1.arcs) in1[i] = 1;
    for (int i : j2.arcs) in2[i] = 1;
    for (int p : chosen_paths)
        for (int a : alt.paths.at(p).arcs) {
            in1[a] = !in1[a];
            in2[a] = !in2[a];
        }
    RoundedOneFactor f1, f2;
    for (int i = 0; i < d.num_arcs(); i++) {
        if (in1[i]) f1.arcs.push_back(i);
        if (in2[i]) f2.arcs.push_back(i);
    }
    f1.dyad_centers = dyad_centers_of(d, f1.arcs);
    f2.dyad_centers = dyad_centers_of(d, f2.arcs);
    return {f1, f2};
}

FactorPacking equitable_packing_rho_le_1(const WeightedDigraph& d, int t) {
    if (rho(t, d) > 1) throw std::invalid_argument("rho > 1");
    auto factors = rounded_one_factor_partition(d, t);
    FactorPacking pk;
    for (auto& f : factors) {
        if (!is_dijoin(d, f.arcs))
            throw std::runtime_error("rho<=1 factor failed the dijoin check (internal)");
        pk.dijoins.push_back(f.arcs);
    }
    pk.equitable = true;
    return pk;
}

long long imbalance_gcd(const WeightedDigraph& d) {
    long long g = 0;
    for (int v = 0; v < d.num_vertices(); v++) g = std::gcd(g, std::llabs(d.imbalance(v)));
    return g;
}

bool is_weighted_packing(const WeightedDigraph& d, const std::vector<std::vector<int>>& packing) {
    std::vector<long long> use(d.num_arcs(), 0);
    for (auto& J : packing) {
        if (!is_dijoin(d, J)) return false;
        for (int i : J) use[i]++;
    }
    for (int i = 0; i < d.num_arcs(); i++)
        if (use[i] > d.arc(i).weight) return false;
    return true;
}

bool is_equitable(const WeightedDigraph& d, const std::vector<std::vector<int>>& packing,
                  std::size_t cap) {
    auto mins = minimal_dicut_masks(d, cap);
    for (auto m : mins) {
        long long lo = -1, hi = -1;
        for (auto& J : packing) {
            long long c = 0;
            for (int i : J)
                if ((m >> i) & 1) c++;
            if (lo < 0 || c < lo) lo = c;
            if (c > hi) hi = c;
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

}  // namespace dipack
