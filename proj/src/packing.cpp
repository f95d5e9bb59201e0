#include "dipack/packing.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dipack/bmatching.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"

namespace dipack {

static long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

static WeightedDigraph weight_one_subgraph(const WeightedDigraph& d) {
    WeightedDigraph d1(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs())
        if (a.weight >= 1) d1.add_arc(a.tail, a.head, a.weight);
    return d1;
}

static std::vector<int> a1_arcs(const WeightedDigraph& d) {
    std::vector<int> out;
    for (int i = 0; i < d.num_arcs(); i++)
        if (d.arc(i).weight >= 1) out.push_back(i);
    return out;
}

// explicit M1/M0 over active ground; enumeration route when shores fit, flow
// route otherwise (guarded by ground size)
static ExplicitMatroid instance_matroid_explicit(const WeightedDigraph& d, int t, int which,
                                                 std::vector<int>* ground_out) {
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("sink-regular weighted (tau,tau+1)-bipartite input required");
    std::vector<int> ground = cls.active;
    if (ground_out) *ground_out = ground;
    if (ground.size() > 20) throw std::invalid_argument("active ground too large");
    try {
        InstanceMatroid im = build_instance_matroid(d, t, which, 300000);
        return im.explicit_matroid(which == 1 ? "M1" : "M0");
    } catch (const EnumCapExceeded&) {
        // flow-backed enumeration of candidate bases
        auto disc = discrepancy_vector(d);
        long long discV = 0;
        for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
        if (ground.size() > 14)
            throw std::invalid_argument("ground too large for flow-backed base enumeration");
        ExplicitMatroid m;
        m.n = (int)ground.size();
        m.name = which == 1 ? "M1" : "M0";
        for (std::uint32_t s = 0; s < (1u << m.n); s++) {
            if (__builtin_popcount(s) != discV) continue;
            std::vector<int> q;
            for (int i = 0; i < m.n; i++)
                if ((s >> i) & 1) q.push_back(ground[i]);
            bool ok = which == 1 ? m1_is_basis_flow(d, t, q) : m0_is_basis_flow(d, t, q);
            if (ok) m.bases.push_back(s);
        }
        return m;
    }
}

std::pair<std::vector<int>, std::vector<int>> pack_dijoin_and_rest_sink_regular(
    const WeightedDigraph& d, int t) {
    for (const Arc& a : d.arcs())
        if (a.weight != 1)
            throw std::invalid_argument("unweighted (all-ones) sink-regular instance required");
    std::vector<int> ground;
    ExplicitMatroid m1 = instance_matroid_explicit(d, t, 1, &ground);
    auto parts = matroid_basis_partition(m1, t);
    if (!parts) throw std::runtime_error("M1 basis partition failed (internal)");
    std::vector<long long> b(d.num_vertices(), 1);
    for (size_t i = 0; i < ground.size(); i++)
        if ((parts->at(0) >> i) & 1) b[ground[i]] = 2;
    auto bm = perfect_b_matching(d, b);
    if (!bm.exists) throw std::runtime_error("perfect b-matching missing (internal)");
    std::vector<int> j, rest;
    for (int i = 0; i < d.num_arcs(); i++) {
        if (bm.x[i] < 0 || bm.x[i] > 1) throw std::runtime_error("non 0/1 b-matching");
        (bm.x[i] == 1 ? j : rest).push_back(i);
    }
    if (!is_dijoin(d, j)) throw std::runtime_error("b-matching not a dijoin (internal)");
    auto cov = min_dicut_coverage(d, rest);
    if (cov && *cov < t - 1) throw std::runtime_error("rest not a (tau-1)-dijoin (internal)");
    return {j, rest};
}

std::pair<std::vector<int>, std::vector<int>> pack_dijoin_and_rest(const WeightedDigraph& d,
                                                                   int t) {
    if (t < 2) throw std::invalid_argument("tau >= 2 required");
    for (const Arc& a : d.arcs())
        if (a.weight != 1) throw std::invalid_argument("unweighted digraph required");
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind < t) throw std::invalid_argument("a dicut of size < tau exists");
    if (t == 2) {
        auto j = find_minimal_dijoin(d);
        std::vector<char> in(d.num_arcs(), 0);
        for (int i : j) in[i] = 1;
        std::vector<int> rest;
        for (int i = 0; i < d.num_arcs(); i++)
            if (!in[i]) rest.push_back(i);
        if (!is_dijoin(d, rest))
            throw std::runtime_error("complement of minimal dijoin not a dijoin (internal)");
        return {j, rest};
    }
    auto cls = classify_bipartite(d, t);
    if (cls.is_weighted_tau_bipartite && cls.is_sink_regular)
        return pack_dijoin_and_rest_sink_regular(d, t);

    DecomposeAndLift dl = decompose_and_lift_unweighted(d, t, LiftMode::sink_regular);
    std::vector<char> in_j(d.num_arcs(), 0);
    for (size_t p = 0; p < dl.lifts.size(); p++) {
        auto [jp, restp] = pack_dijoin_and_rest_sink_regular(dl.lifts[p].lifted, t);
        auto img = transport_from_lift(dl.lifts[p], {jp});
        for (int piece_arc : img[0]) in_j[dl.forest.arc_provenance[p].at(piece_arc)] = 1;
    }
    std::vector<int> j, rest;
    for (int i = 0; i < d.num_arcs(); i++) (in_j[i] ? j : rest).push_back(i);
    auto c1 = min_dicut_coverage(d, j);
    auto c2 = min_dicut_coverage(d, rest);
    if ((c1 && *c1 < 1) || (c2 && *c2 < t - 1))
        throw std::runtime_error("transported split failed verification (internal)");
    return {j, rest};
}

WeightedTwoDijoins weighted_two_dijoins(const WeightedDigraph& d, int t,
                                        const std::vector<int>& q_vertices,
                                        const std::vector<int>& q_prime_vertices) {
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("sink-regular instance required");
    std::set<int> qa(q_vertices.begin(), q_vertices.end());
    std::set<int> qb(q_prime_vertices.begin(), q_prime_vertices.end());
    std::set<int> act(cls.active.begin(), cls.active.end());
    for (int v : qa)
        if (qb.count(v)) throw std::invalid_argument("Q and Q' intersect");
    std::set<int> uni = qa;
    uni.insert(qb.begin(), qb.end());
    if (uni != act) throw std::invalid_argument("Q + Q' must partition the active set");
    if (!is_admissible(d, t, q_vertices)) throw std::invalid_argument("Q not admissible");
    if (!is_k_admissible(d, t, q_prime_vertices, t - 1))
        throw std::invalid_argument("Q' not (tau-1)-admissible");

    WeightedDigraph d1 = weight_one_subgraph(d);
    std::vector<int> back = a1_arcs(d);  // d1 arc i corresponds to d arc back[i]
    std::vector<long long> b(d.num_vertices(), 1);
    for (int v : q_vertices) b[v] = 2;
    auto bm = perfect_b_matching(d1, b);
    if (!bm.exists) throw std::runtime_error("b-matching missing for admissible Q (internal)");
    WeightedTwoDijoins out;
    for (int i = 0; i < d1.num_arcs(); i++)
        (bm.x[i] == 1 ? out.dijoin : out.rest).push_back(back[i]);
    if (!is_dijoin(d, out.dijoin)) throw std::runtime_error("J not a dijoin (internal)");
    auto cov = min_dicut_coverage(d, out.rest);
    if (cov && *cov < t - 1)
        throw std::runtime_error("A1 - J not a (tau-1)-dijoin (internal)");
    return out;
}

static WeightedDigraph reweight(const WeightedDigraph& d, const std::vector<int>& ones) {
    WeightedDigraph out(d.num_vertices(), d.name());
    std::vector<char> in(d.num_arcs(), 0);
    for (int i : ones) in[i] = 1;
    for (int i = 0; i < d.num_arcs(); i++)
        out.add_arc(d.arc(i).tail, d.arc(i).head, in[i] ? 1 : 0);
    return out;
}

PackingCertificate pack_sbo(const WeightedDigraph& d, int t, bool assume_sbo) {
    for (const Arc& a : d.arcs())
        if (a.weight > 1) throw std::invalid_argument("0/1 weights required (replicate first)");
    if (t == 1) {
        // base of the induction: the weight-1 arcs form one rounded 1-factor dijoin
        auto cls = classify_bipartite(d, 1);
        std::vector<int> a1 = a1_arcs(d);
        if (!is_dijoin(d, a1)) throw std::runtime_error("tau=1 base not a dijoin (internal)");
        PackingCertificate pc;
        pc.dijoins.push_back(a1);
        return pc;
    }
    std::vector<int> ground;
    ExplicitMatroid m1 = instance_matroid_explicit(d, t, 1, &ground);
    if (!assume_sbo) {
        if (m1.n > 12) throw std::invalid_argument("SBO check guarded to ground <= 12");
        if (!is_strongly_base_orderable(m1))
            throw std::invalid_argument("M1 is not strongly base orderable");
    }
    ExplicitMatroid m0 = instance_matroid_explicit(d, t, 0, nullptr);
    auto common = common_base_partition_sbo(m0, m1, t);
    if (!common) throw std::runtime_error("common base partition failed (SBO precondition?)");
    // peel the first admissible set's rounded 1-factor, recurse on the rest
    std::vector<int> q;
    for (size_t i = 0; i < ground.size(); i++)
        if ((common->at(0) >> i) & 1) q.push_back(ground[i]);
    WeightedDigraph d1 = weight_one_subgraph(d);
    std::vector<int> back = a1_arcs(d);
    std::vector<long long> b(d.num_vertices(), 1);
    for (int v : q) b[v] = 2;
    auto bm = perfect_b_matching(d1, b);
    if (!bm.exists) throw std::runtime_error("bimatchable set had no b-matching (internal)");
    std::vector<int> j, rest;
    for (int i = 0; i < d1.num_arcs(); i++)
        (bm.x[i] == 1 ? j : rest).push_back(back[i]);
    if (!is_dijoin(d, j)) throw std::runtime_error("admissible factor not a dijoin (internal)");
    PackingCertificate pc;
    pc.dijoins.push_back(j);
    WeightedDigraph resid = reweight(d, rest);
    PackingCertificate sub = pack_sbo(resid, t - 1, /*assume_sbo=*/true);
    for (auto& J : sub.dijoins) {
        if (!is_dijoin(d, J)) throw std::runtime_error("residual member not a dijoin of D");
        pc.dijoins.push_back(J);
    }
    return pc;
}

PackingCertificate pack_sbo2(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices,
                             const std::vector<int>& q_prime_vertices) {
    WeightedTwoDijoins split = weighted_two_dijoins(d, t, q_vertices, q_prime_vertices);
    // residual (tau-1,tau)-instance must have strongly base orderable M1
    WeightedDigraph resid = reweight(d, split.rest);
    {
        ExplicitMatroid m1r = instance_matroid_explicit(resid, t - 1, 1, nullptr);
        if (m1r.n > 12) throw std::invalid_argument("SBO check guarded to ground <= 12");
        if (!is_strongly_base_orderable(m1r))
            throw std::invalid_argument("M1 restricted to Q' is not strongly base orderable");
    }
    PackingCertificate pc;
    pc.dijoins.push_back(split.dijoin);
    PackingCertificate sub = pack_sbo(resid, t - 1, /*assume_sbo=*/true);
    for (auto& J : sub.dijoins) {
        if (!is_dijoin(d, J)) throw std::runtime_error("residual member not a dijoin of D");
        pc.dijoins.push_back(J);
    }
    return pc;
}

// ---- the elementary rho<=2 route ----

static std::vector<std::vector<int>> rho2_elementary(const WeightedDigraph& d, int t);

static std::vector<std::vector<int>> rho2_base_case(const WeightedDigraph& d, int t) {
    long long r = rho(t, d);
    if (r <= 1) {
        auto pk = equitable_packing_rho_le_1(d, t);
        return pk.dijoins;
    }
    // rho = 2: local search over rounded 1-factor partitions
    auto disc = discrepancy_vector(d);
    auto shores = enumerate_dicut_shores(d);
    std::vector<std::uint64_t> zero_disc;
    for (auto U : shores) {
        long long s = 0;
        for (int v = 0; v < d.num_vertices(); v++)
            if ((U >> v) & 1) s += disc[v];
        if (s == 0) zero_disc.push_back(U);
    }
    std::sort(zero_disc.begin(), zero_disc.end(),
              [](std::uint64_t a, std::uint64_t b) {
                  int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
                  return pa != pb ? pa < pb : a < b;
              });
    std::vector<std::uint64_t> umin;
    for (auto U : zero_disc) {
        bool has_sub = false;
        for (auto W : umin)
            if ((W & U) == W) {
                has_sub = true;
                break;
            }
        if (!has_sub) umin.push_back(U);
    }
    auto factors = rounded_one_factor_partition(d, t);
    auto dyads_in = [&](const RoundedOneFactor& f, std::uint64_t U) {
        int c = 0;
        for (int v : f.dyad_centers)
            if ((U >> v) & 1) c++;
        return c;
    };
    auto potential = [&]() {
        long long p = 0;
        for (auto U : umin)
            for (auto& f : factors)
                if (dyads_in(f, U) > 0) p++;
        return p;
    };
    long long target = (long long)t * (long long)umin.size();
    long long p = potential();
    int guard = 0;
    while (p < target) {
        if (++guard > 10000) throw std::runtime_error("potential loop failed to converge");
        int f1 = -1;
        std::uint64_t U = 0;
        for (auto Uc : umin) {
            for (size_t i = 0; i < factors.size() && f1 < 0; i++)
                if (dyads_in(factors[i], Uc) == 0) {
                    f1 = (int)i;
                    U = Uc;
                }
            if (f1 >= 0) break;
        }
        assert(f1 >= 0);
        int f2 = -1;
        for (size_t i = 0; i < factors.size(); i++)
            if ((int)i != f1 && dyads_in(factors[i], U) == 2) f2 = (int)i;
        if (f2 < 0) throw std::runtime_error("no factor with both dyads inside (internal)");
        auto alt = alternating_decomposition(d, t, factors[f2], factors[f1]);
        if (alt.paths.empty()) throw std::runtime_error("no alternating path (internal)");
        auto [nf2, nf1] = apply_path_swap(d, factors[f2], factors[f1], alt, {0});
        factors[f2] = nf2;
        factors[f1] = nf1;
        long long np = potential();
        if (np <= p) throw std::runtime_error("potential did not increase (internal)");
        p = np;
    }
    std::vector<std::vector<int>> out;
    for (auto& f : factors) {
        if (!is_dijoin(d, f.arcs))
            throw std::runtime_error("base-case factor not a dijoin (internal)");
        out.push_back(f.arcs);
    }
    return out;
}

static std::vector<std::vector<int>> rho2_elementary(const WeightedDigraph& d, int t) {
    auto disc = discrepancy_vector(d);
    auto shores = enumerate_dicut_shores(d);
    long long mind = -1;
    for (auto U : shores) {
        long long w = cut_weight(d, U);
        if (mind < 0 || w < mind) mind = w;
    }
    int n = d.num_vertices();
    std::uint64_t chosen = 0;
    for (auto U : shores) {
        int p = __builtin_popcountll(U);
        if (p == 1 || p == n - 1) continue;
        if (cut_weight(d, U) == mind) {
            chosen = U;
            break;  // shores are sorted ascending: lexicographically smallest mask
        }
    }
    if (chosen == 0) return rho2_base_case(d, t);

    // split at the chosen non-trivial minimum weight dicut
    std::vector<int> labels;  // the tau weight-1 arcs of delta+(U), ascending
    for (int i = 0; i < d.num_arcs(); i++) {
        const Arc& a = d.arc(i);
        if (((chosen >> a.tail) & 1) && !((chosen >> a.head) & 1) && a.weight == 1)
            labels.push_back(i);
    }
    if ((long long)labels.size() != mind)
        throw std::runtime_error("minimum dicut weight mismatch (internal)");
    std::vector<char> inU(n, 0), outU(n, 0);
    for (int v = 0; v < n; v++) {
        if ((chosen >> v) & 1)
            inU[v] = 1;
        else
            outU[v] = 1;
    }
    Contraction c1 = identify_vertices(d, outU);  // D1: keep U, sink u1
    Contraction c2 = identify_vertices(d, inU);   // D2: keep V-U, source u2
    auto sub1 = rho2_elementary(c1.digraph, t);
    auto sub2 = rho2_elementary(c2.digraph, t);
    if ((int)sub1.size() != t || (int)sub2.size() != t)
        throw std::runtime_error("recursive packing size mismatch");
    // map members back to original arc ids and align by labeled arc
    auto back_map = [&](const Contraction& c, const std::vector<std::vector<int>>& packs) {
        std::vector<int> inv(c.digraph.num_arcs(), -1);
        for (int i = 0; i < d.num_arcs(); i++)
            if (c.old_to_new[i] >= 0) inv[c.old_to_new[i]] = i;
        std::vector<std::vector<int>> out;
        for (auto& J : packs) {
            std::vector<int> o;
            for (int i : J) o.push_back(inv[i]);
            std::sort(o.begin(), o.end());
            out.push_back(o);
        }
        return out;
    };
    auto p1 = back_map(c1, sub1);
    auto p2 = back_map(c2, sub2);
    auto align = [&](std::vector<std::vector<int>>& packs) {
        std::vector<std::vector<int>> by_label(labels.size());
        std::vector<char> used(packs.size(), 0);
        for (size_t l = 0; l < labels.size(); l++) {
            bool found = false;
            for (size_t j = 0; j < packs.size() && !found; j++) {
                if (used[j]) continue;
                if (std::binary_search(packs[j].begin(), packs[j].end(), labels[l])) {
                    by_label[l] = packs[j];
                    used[j] = 1;
                    found = true;
                }
            }
            if (!found) throw std::runtime_error("piece member misses its labeled arc");
        }
        packs = by_label;
    };
    align(p1);
    align(p2);
    std::vector<std::vector<int>> glued;
    for (size_t j = 0; j < labels.size(); j++) {
        std::vector<int> J = p1[j];
        for (int i : p2[j]) J.push_back(i);
        std::sort(J.begin(), J.end());
        J.erase(std::unique(J.begin(), J.end()), J.end());
        if (!is_dijoin(d, J)) throw std::runtime_error("glued member not a dijoin (internal)");
        glued.push_back(J);
    }
    return glued;
}

PackingCertificate pack_rho2(const WeightedDigraph& d, int t, Rho2Route route) {
    for (const Arc& a : d.arcs())
        if (a.weight > 1) throw std::invalid_argument("0/1 weights required (replicate first)");
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("sink-regular instance required");
    if (rho(t, d) > 2) throw std::invalid_argument("rho > 2");
    PackingCertificate pc;
    if (route == Rho2Route::matroid) {
        pc = pack_sbo(d, t, /*assume_sbo=*/true);  // rank <= 2: automatic
        pc.provenance.push_back("rho2:matroid");
        return pc;
    }
    pc.dijoins = rho2_elementary(d, t);
    pc.provenance.push_back("rho2:elementary");
    return pc;
}

PackingCertificate pack_tau3_rho3(const WeightedDigraph& d) {
    const int t = 3;
    for (const Arc& a : d.arcs())
        if (a.weight != 1) throw std::invalid_argument("all-ones (3,4)-bipartite input required");
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("sink-regular (3,4)-bipartite input required");
    long long r = rho(t, d);
    if (r > 3) throw std::invalid_argument("rho > 3");
    if (r <= 2) return pack_rho2(d, t);
    std::vector<int> ground;
    ExplicitMatroid m1 = instance_matroid_explicit(d, t, 1, &ground);
    auto parts = matroid_basis_partition(m1, t);
    if (!parts) throw std::runtime_error("M1 basis partition failed (internal)");
    Mk4FreePair fp = find_mk4_free_pair(m1, *parts);
    int other = 3 - fp.i - fp.j;
    auto verts = [&](std::uint32_t s) {
        std::vector<int> out;
        for (size_t i = 0; i < ground.size(); i++)
            if ((s >> i) & 1) out.push_back(ground[i]);
        return out;
    };
    std::vector<int> q = verts(fp.parts[other]);
    std::vector<int> qp = verts(fp.parts[fp.i] | fp.parts[fp.j]);
    PackingCertificate pc = pack_sbo2(d, t, q, qp);
    pc.provenance.push_back("tau3rho3:mk4-free-pair");
    return pc;
}

// ---- top-level dispatcher ----

static PackingCertificate pack_piece(const WeightedDigraph& piece, int t, bool all_ones,
                                     OutOfTheoremRange* oor) {
    long long r = rho(t, piece);
    if (r <= 1) {
        auto pk = equitable_packing_rho_le_1(piece, t);
        PackingCertificate pc;
        pc.dijoins = pk.dijoins;
        pc.equitable = true;
        pc.provenance.push_back("piece:rho<=1");
        return pc;
    }
    if (r == 2) {
        bool small = piece.num_vertices() <= 26;
        if (small) {
            try {
                return pack_rho2(piece, t, Rho2Route::elementary);
            } catch (const EnumCapExceeded&) {
            }
        }
        return pack_rho2(piece, t, Rho2Route::matroid);
    }
    if (r == 3 && t == 3 && all_ones) return pack_tau3_rho3(piece);
    OutOfTheoremRange o;
    o.reason = "piece with rho = " + std::to_string(r) + " at tau = " + std::to_string(t) +
               (all_ones ? " (unweighted)" : " (weighted)") + " is outside the proven range";
    o.rho_value = r;
    o.tau_value = t;
    *oor = o;
    throw o;  // caught by pack()
}

PackResult pack(const WeightedDigraph& d, int t) {
    PackResult res;
    if (t < 2) throw std::invalid_argument("tau >= 2 required");
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind < t)
        throw std::invalid_argument("a dicut of weight < tau exists; packing of size tau impossible");
    bool all_ones = true;
    for (const Arc& a : d.arcs()) all_ones &= a.weight == 1;

    Replication rep = replicate_weights(d);
    const WeightedDigraph& d0 = rep.digraph;

    std::vector<std::vector<std::vector<int>>> piece_packings;  // over forest pieces
    DecompositionForest forest;
    bool equitable_all = true;
    std::vector<std::string> prov;
    try {
        auto cls = classify_bipartite(d0, t);
        if (cls.is_weighted_tau_bipartite && cls.is_sink_regular) {
            // already in the target class: single piece, identity transport
            forest.pieces.push_back(d0);
            std::vector<int> idmap(d0.num_arcs());
            std::iota(idmap.begin(), idmap.end(), 0);
            forest.arc_provenance.push_back(idmap);
            OutOfTheoremRange oor;
            PackingCertificate pc = pack_piece(d0, t, all_ones, &oor);
            equitable_all &= pc.equitable;
            for (auto& s : pc.provenance) prov.push_back(s);
            piece_packings.push_back(pc.dijoins);
        } else {
            DecomposeAndLift dl = all_ones && t >= 3
                                      ? decompose_and_lift_unweighted(d0, t, LiftMode::sink_regular)
                                      : decompose_and_lift(d0, t, LiftMode::sink_regular);
            forest = dl.forest;
            prov.push_back("decompose:" + std::to_string(forest.pieces.size()) + " pieces");
            for (size_t p = 0; p < dl.lifts.size(); p++) {
                bool piece_ones = true;
                for (const Arc& a : dl.lifts[p].lifted.arcs()) piece_ones &= a.weight == 1;
                OutOfTheoremRange oor;
                PackingCertificate pc = pack_piece(dl.lifts[p].lifted, t, piece_ones, &oor);
                equitable_all &= pc.equitable;
                for (auto& s : pc.provenance) prov.push_back(s);
                piece_packings.push_back(transport_from_lift(dl.lifts[p], pc.dijoins));
            }
        }
    } catch (const OutOfTheoremRange& o) {
        res.out_of_range = o;
        return res;
    }

    auto rep_members = transport_from_forest(d0, forest, piece_packings);
    // map replicated arcs back to the original arc ids
    PackingCertificate cert;
    cert.provenance = prov;
    for (auto& J : rep_members) {
        std::vector<int> img;
        for (int i : J) img.push_back(rep.provenance[i]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        cert.dijoins.push_back(std::move(img));
    }
    if ((int)cert.dijoins.size() != t)
        throw std::runtime_error("packing size mismatch (internal)");
    if (!is_weighted_packing(d, cert.dijoins))
        throw std::runtime_error("final packing failed verification (internal)");
    if (equitable_all) {
        if (d.num_arcs() <= 64) {
            try {
                cert.equitable = is_equitable(d, cert.dijoins, 300000);
            } catch (const EnumCapExceeded&) {
                cert.equitable = false;
            }
        }
    }
    res.certificate = std::move(cert);
    return res;
}

PackingCertificate gcd_packing_certificate(const WeightedDigraph& d) {
    long long g = imbalance_gcd(d);
    auto tw = min_dicut_weight_flow(d);
    std::vector<int> a1 = a1_arcs(d);
    if (tw && *tw == 0)
        throw std::invalid_argument("a dicut of weight 0 exists; no positive packing");
    if (g == 0) {
        if (!tw) {
            PackingCertificate pc;
            pc.dijoins.push_back(a1);
            pc.equitable = true;
            pc.provenance.push_back("gcd:no-dicut");
            return pc;
        }
        g = *tw;
    }
    if (g == 1) {
        PackingCertificate pc;
        if (!is_dijoin(d, a1)) throw std::runtime_error("weight-positive arcs not a dijoin");
        pc.dijoins.push_back(a1);
        pc.equitable = true;
        pc.provenance.push_back("gcd:single");
        return pc;
    }
    PackResult r = pack(d, (int)g);
    if (!r.ok()) throw std::runtime_error("gcd packing unexpectedly out of range (internal)");
    if (!r.certificate->equitable && d.num_arcs() <= 64) {
        if (!is_equitable(d, r.certificate->dijoins))
            throw std::runtime_error("gcd packing not equitable (internal)");
        r.certificate->equitable = true;
    }
    r.certificate->provenance.push_back("gcd:" + std::to_string(g));
    return *r.certificate;
}

bool verify_certificate(const WeightedDigraph& d, int t, const PackingCertificate& cert,
                        std::string* why) {
    if ((int)cert.dijoins.size() != t) {
        if (why) *why = "size mismatch";
        return false;
    }
    if (!is_weighted_packing(d, cert.dijoins)) {
        if (why) *why = "not a weighted packing of dijoins";
        return false;
    }
    if (cert.equitable && d.num_arcs() <= 64) {
        if (!is_equitable(d, cert.dijoins)) {
            if (why) *why = "equitable flag not justified";
            return false;
        }
    }
    return true;
}

}  // namespace dipack
