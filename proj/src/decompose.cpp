#include "dipack/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"

namespace dipack {

static long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

std::optional<PseudoCutWitness> find_pseudo_cut_vertex(const WeightedDigraph& d) {
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind == 0)
        throw std::invalid_argument("instance already has a dicut of weight 0");
    int n = d.num_vertices();
    for (int v = 0; v < n; v++) {
        // delete v
        WeightedDigraph dd(n - 1);
        std::vector<int> back(n - 1);
        std::vector<int> fwd(n, -1);
        int at = 0;
        for (int u = 0; u < n; u++)
            if (u != v) {
                fwd[u] = at;
                back[at++] = u;
            }
        for (const Arc& a : d.arcs())
            if (a.tail != v && a.head != v) dd.add_arc(fwd[a.tail], fwd[a.head], a.weight);
        std::vector<long long> h(n - 1, 0);
        for (const Arc& a : dd.arcs()) {
            h[a.tail] += a.weight;
            h[a.head] -= a.weight;
        }
        auto r = shore_min_modular(dd, h);
        if (r && r->value == 0) {
            PseudoCutWitness w;
            w.vertex = v;
            w.shore.assign(n, 0);
            for (int u = 0; u < n - 1; u++)
                if (r->shore[u]) w.shore[back[u]] = 1;
            return w;
        }
    }
    return std::nullopt;
}

SplitResult split_at_pseudo_cut_vertex(const WeightedDigraph& d, const PseudoCutWitness& w) {
    int n = d.num_vertices();
    if (w.vertex < 0 || w.vertex >= n || w.shore[w.vertex])
        throw std::invalid_argument("invalid pseudo-cut-vertex witness");
    bool any = false, all = true;
    for (int u = 0; u < n; u++)
        if (u != w.vertex) {
            any |= w.shore[u] != 0;
            all &= w.shore[u] != 0;
        }
    if (!any || all) throw std::invalid_argument("witness shore empty or full");
    // no arc may enter U1' avoiding v, and arcs leaving U1' into U2' must have weight 0
    for (const Arc& a : d.arcs()) {
        if (a.tail == w.vertex || a.head == w.vertex) continue;
        if (!w.shore[a.tail] && w.shore[a.head])
            throw std::invalid_argument("witness violated: arc enters U1'");
        if (w.shore[a.tail] && !w.shore[a.head] && a.weight != 0)
            throw std::invalid_argument("witness violated: positive arc leaves U1'");
    }
    // U2 = complement of U1' minus v, plus v; D1 identifies U2, D2 identifies U1
    std::vector<char> u2(n, 0), u1(n, 0);
    for (int u = 0; u < n; u++) {
        u1[u] = w.shore[u];
        u2[u] = !w.shore[u];
    }
    u1[w.vertex] = 1;
    u2[w.vertex] = 1;
    SplitResult out;
    Contraction c1 = identify_vertices(d, u2);
    Contraction c2 = identify_vertices(d, u1);
    out.d1 = c1.digraph;
    out.d2 = c2.digraph;
    out.arcs1.assign(out.d1.num_arcs(), -1);
    out.arcs2.assign(out.d2.num_arcs(), -1);
    for (int i = 0; i < d.num_arcs(); i++) {
        if (c1.old_to_new[i] >= 0) out.arcs1[c1.old_to_new[i]] = i;
        if (c2.old_to_new[i] >= 0) out.arcs2[c2.old_to_new[i]] = i;
    }
    return out;
}

DecompositionForest decompose(const WeightedDigraph& d) {
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind == 0) throw std::invalid_argument("dicut of weight 0 present");
    DecompositionForest out;
    std::vector<std::pair<WeightedDigraph, std::vector<int>>> work;
    std::vector<int> idmap(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); i++) idmap[i] = i;
    work.push_back({d, idmap});
    while (!work.empty()) {
        auto [piece, prov] = std::move(work.back());
        work.pop_back();
        auto wtn = find_pseudo_cut_vertex(piece);
        if (!wtn) {
            out.pieces.push_back(std::move(piece));
            out.arc_provenance.push_back(std::move(prov));
            continue;
        }
        SplitResult sp = split_at_pseudo_cut_vertex(piece, *wtn);
        std::vector<int> p1(sp.arcs1.size()), p2(sp.arcs2.size());
        for (size_t i = 0; i < sp.arcs1.size(); i++) p1[i] = prov[sp.arcs1[i]];
        for (size_t i = 0; i < sp.arcs2.size(); i++) p2[i] = prov[sp.arcs2[i]];
        work.push_back({std::move(sp.d1), std::move(p1)});
        work.push_back({std::move(sp.d2), std::move(p2)});
    }
    return out;
}

LiftResult lift(const WeightedDigraph& d_in, int t, const std::vector<long long>& ell_plus,
                const std::vector<long long>& ell_minus, bool check_irreducible,
                bool validate_output) {
    if (t < 2) throw std::invalid_argument("lift needs tau >= 2");
    auto mind = min_dicut_weight_flow(d_in);
    if (mind && *mind < t) throw std::invalid_argument("a dicut of weight < tau exists");
    if (check_irreducible && find_pseudo_cut_vertex(d_in))
        throw std::invalid_argument("instance has a pseudo-cut-vertex; decompose first");
    for (int v = 0; v < d_in.num_vertices(); v++) {
        if (ell_plus[v] < 0 || ell_minus[v] < 0) throw std::invalid_argument("ell >= 0");
        if (pos_mod(ell_plus[v] - ell_minus[v] - d_in.imbalance(v), t) != 0)
            throw std::invalid_argument("per-vertex ell congruence violated");
    }
    Replication rep = replicate_weights(d_in);
    const WeightedDigraph& d0 = rep.digraph;
    int n = d0.num_vertices();

    // per-vertex incident arcs, ascending index
    std::vector<std::vector<int>> inc(n);
    for (int i = 0; i < d0.num_arcs(); i++) {
        inc[d0.arc(i).tail].push_back(i);
        inc[d0.arc(i).head].push_back(i);
    }
    std::vector<char> keep(n, 0);
    for (int v = 0; v < n; v++) {
        bool pure_src = d0.weighted_in_degree(v) == 0;
        bool pure_sink = d0.weighted_out_degree(v) == 0;
        keep[v] = (pure_src || pure_sink) && d0.weighted_degree(v) == t && ell_plus[v] == 0 &&
                  ell_minus[v] == 0;
    }

    LiftResult lr;
    lr.tau = t;
    std::vector<GadgetResult> gadgets(n);
    std::vector<int> base(n, -1);
    int nv = 0;
    double xoff = 0;
    std::vector<std::pair<double, double>> coords;
    for (int v = 0; v < n; v++) {
        base[v] = nv;
        if (keep[v]) {
            nv += 1;
            coords.push_back({xoff, -4.0});
            xoff += 2.0;
        } else {
            GadgetSpec spec;
            spec.tau = t;
            spec.ell_plus = ell_plus[v];
            spec.ell_minus = ell_minus[v];
            for (int i : inc[v]) {
                SeqEntry e;
                e.leaving = d0.arc(i).tail == v;
                e.weight = (int)d0.arc(i).weight;
                spec.seq.push_back(e);
            }
            gadgets[v] = build_gadget(spec);
            auto bad = check_gadget(gadgets[v], spec);
            if (!bad.empty()) throw std::runtime_error("gadget checker failed: " + bad[0]);
            for (auto [x, y] : gadgets[v].coords) coords.push_back({x + xoff, y});
            nv += gadgets[v].digraph.num_vertices();
            xoff += 2.0 * (gadgets[v].k + 2);
        }
    }
    WeightedDigraph dl(nv, d_in.name() + "_lifted");
    lr.vertex_origin.assign(nv, -1);
    for (int v = 0; v < n; v++) {
        int cnt = keep[v] ? 1 : gadgets[v].digraph.num_vertices();
        for (int k = 0; k < cnt; k++) lr.vertex_origin[base[v] + k] = v;
    }
    // original (replicated) arcs first: index i in dl equals index i in d0
    for (int i = 0; i < d0.num_arcs(); i++) {
        const Arc& a = d0.arc(i);
        int tail, head;
        if (keep[a.tail])
            tail = base[a.tail];
        else {
            int pos = (int)(std::find(inc[a.tail].begin(), inc[a.tail].end(), i) -
                            inc[a.tail].begin());
            tail = base[a.tail] + gadgets[a.tail].phi[pos];
        }
        if (keep[a.head])
            head = base[a.head];
        else {
            int pos = (int)(std::find(inc[a.head].begin(), inc[a.head].end(), i) -
                            inc[a.head].begin());
            head = base[a.head] + gadgets[a.head].phi[pos];
        }
        int idx = dl.add_arc(tail, head, a.weight);
        lr.old_arcs.push_back(idx);
        lr.old_arc_provenance.push_back(rep.provenance[i]);
    }
    // gadget internal arcs
    for (int v = 0; v < n; v++) {
        if (keep[v]) continue;
        for (const Arc& a : gadgets[v].digraph.arcs())
            dl.add_arc(base[v] + a.tail, base[v] + a.head, a.weight);
    }
    lr.lifted = std::move(dl);
    lr.coords = std::move(coords);

    if (!validate_output) return lr;
    auto cls = classify_bipartite(lr.lifted, t);
    if (!cls.is_weighted_tau_bipartite)
        throw std::runtime_error("lift output failed (tau,tau+1)-bipartite classification: " +
                                 (cls.diagnostics.empty() ? "" : cls.diagnostics[0]));
    long long want_plus = 0, want_minus = 0;
    for (int v = 0; v < n; v++) {
        want_plus += ell_plus[v];
        want_minus += ell_minus[v];
    }
    long long got_plus = 0, got_minus = 0;
    for (int v : cls.active) {
        if (lr.lifted.weighted_in_degree(v) == 0)
            got_plus++;
        else
            got_minus++;
    }
    if (got_plus != want_plus || got_minus != want_minus)
        throw std::runtime_error("lift active counts mismatch");
    return lr;
}

DecomposeAndLift decompose_and_lift(const WeightedDigraph& d, int t, LiftMode mode) {
    if (t < 2) throw std::invalid_argument("tau >= 2 required");
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind < t) throw std::invalid_argument("a dicut of weight < tau exists");
    DecomposeAndLift out;
    out.forest = decompose(d);
    for (const auto& piece : out.forest.pieces) {
        int n = piece.num_vertices();
        std::vector<long long> lp(n, 0), lm(n, 0);
        for (int v = 0; v < n; v++) {
            if (mode == LiftMode::sink_regular) {
                lp[v] = pos_mod(piece.imbalance(v), t);
                lm[v] = 0;
            } else {
                lp[v] = piece.weighted_out_degree(v);
                lm[v] = piece.weighted_in_degree(v);
            }
        }
        out.lifts.push_back(lift(piece, t, lp, lm, /*check_irreducible=*/false));
    }
    return out;
}

DecompositionForest decompose_unweighted(const WeightedDigraph& d) {
    WeightedDigraph ones(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs()) ones.add_arc(a.tail, a.head, 1);
    return decompose(ones);
}

DecomposeAndLift decompose_and_lift_unweighted(const WeightedDigraph& d, int t, LiftMode mode) {
    if (t < 3)
        throw std::invalid_argument("unweighted decompose-and-lift needs tau >= 3");
    WeightedDigraph ones(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs()) ones.add_arc(a.tail, a.head, 1);
    DecomposeAndLift wl = decompose_and_lift(ones, t, mode);
    // replicate each lifted piece to all-unit weights
    for (auto& lr : wl.lifts) {
        for (const Arc& a : lr.lifted.arcs())
            if (a.weight == 0) throw std::runtime_error("zero-weight arc in unweighted lift");
        Replication rep = replicate_weights(lr.lifted);
        std::vector<int> new_old_arcs, new_prov;
        for (size_t j = 0; j < lr.old_arcs.size(); j++)
            for (int r : rep.replicas[lr.old_arcs[j]]) {
                new_old_arcs.push_back(r);
                new_prov.push_back(lr.old_arc_provenance[j]);
            }
        std::vector<std::pair<double, double>> coords;
        // coordinates follow vertices (unchanged by replication)
        lr.lifted = std::move(rep.digraph);
        lr.old_arcs = std::move(new_old_arcs);
        lr.old_arc_provenance = std::move(new_prov);
    }
    return wl;
}

std::vector<std::vector<int>> transport_from_lift(const LiftResult& lr,
                                                  const std::vector<std::vector<int>>& packing) {
    // lifted arc index -> original arc (or -1 for gadget internals)
    std::vector<int> to_orig(lr.lifted.num_arcs(), -1);
    for (size_t j = 0; j < lr.old_arcs.size(); j++)
        to_orig[lr.old_arcs[j]] = lr.old_arc_provenance[j];
    std::vector<std::vector<int>> out;
    for (const auto& J : packing) {
        std::vector<int> img;
        for (int i : J)
            if (to_orig[i] >= 0) img.push_back(to_orig[i]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        out.push_back(std::move(img));
    }
    return out;
}

std::vector<std::vector<int>> transport_from_forest(
    const WeightedDigraph& original, const DecompositionForest& forest,
    const std::vector<std::vector<std::vector<int>>>& piece_packings) {
    if (forest.pieces.size() != piece_packings.size())
        throw std::invalid_argument("one packing per piece required");
    size_t k = 0;
    for (auto& pp : piece_packings) k = std::max(k, pp.size());
    for (auto& pp : piece_packings)
        if (pp.size() != k) throw std::invalid_argument("piece packings differ in size");
    std::vector<std::vector<int>> out(k);
    for (size_t p = 0; p < forest.pieces.size(); p++)
        for (size_t j = 0; j < k; j++)
            for (int i : piece_packings[p][j]) out[j].push_back(forest.arc_provenance[p].at(i));
    for (auto& J : out) {
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
    }
    (void)original;
    return out;
}

}  // namespace dipack
