#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dipack/decompose.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"
#include "testutil.hpp"

using namespace dipack;
using namespace dipack::testutil;

TEST_CASE("path has a pseudo-cut-vertex at the middle") {
    auto p = path(3);
    auto w = find_pseudo_cut_vertex(p);
    REQUIRE(w.has_value());
    CHECK(w->vertex == 1);
    auto sp = split_at_pseudo_cut_vertex(p, *w);
    CHECK(sp.d1.num_vertices() == 2);
    CHECK(sp.d2.num_vertices() == 2);
    CHECK(sp.d1.num_arcs() + sp.d2.num_arcs() == 2);
}

TEST_CASE("K3,3 and the directed 4-cycle are irreducible") {
    CHECK(!find_pseudo_cut_vertex(k33()).has_value());
    CHECK(!find_pseudo_cut_vertex(directed_cycle(4)).has_value());
}

TEST_CASE("invalid witness rejected") {
    auto d = k33();
    PseudoCutWitness w;
    w.vertex = 0;
    w.shore.assign(6, 0);
    w.shore[1] = 1;
    CHECK_THROWS(split_at_pseudo_cut_vertex(d, w));
}

TEST_CASE("decompose a path into single arcs") {
    auto f = decompose(path(3));
    CHECK(f.pieces.size() == 2);
    for (auto& p : f.pieces) CHECK(p.num_arcs() == 1);
    // provenance partitions the arcs
    std::vector<int> seen;
    for (auto& prov : f.arc_provenance)
        for (int i : prov) seen.push_back(i);
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>({0, 1}));
}

TEST_CASE("pendant arc splits off K3,3") {
    WeightedDigraph d(8, "k33p");
    for (int s = 0; s < 3; s++)
        for (int t = 3; t < 6; t++) d.add_arc(s, t, 1);
    d.add_arc(5, 6, 1);  // wait: 5 is a sink; pendant from sink 5 to new 6
    d.add_arc(6, 7, 1);
    auto f = decompose(d);
    CHECK(f.pieces.size() >= 2);
    size_t total = 0;
    for (auto& prov : f.arc_provenance) total += prov.size();
    CHECK(total == (size_t)d.num_arcs());
}

TEST_CASE("split preserves rho bound") {
    std::mt19937 rng(4);
    int done = 0;
    for (int it = 0; it < 300 && done < 25; it++) {
        auto d = random_digraph(rng, 5 + (int)(rng() % 5), 6 + (int)(rng() % 8));
        auto mind = min_dicut_weight_flow(d);
        if (mind && *mind == 0) continue;
        auto w = find_pseudo_cut_vertex(d);
        if (!w) continue;
        done++;
        auto sp = split_at_pseudo_cut_vertex(d, *w);
        for (int t = 2; t <= 4; t++) {
            CHECK(rho(t, sp.d1) <= rho(t, d));
            CHECK(rho(t, sp.d2) <= rho(t, d));
        }
        CHECK(sp.d1.num_vertices() <= d.num_vertices() - 1);
        CHECK(sp.d2.num_vertices() <= d.num_vertices() - 1);
        // nonzero-weight arcs are partitioned between the pieces
        std::vector<int> cnt(d.num_arcs(), 0);
        for (int i : sp.arcs1) cnt[i]++;
        for (int i : sp.arcs2) cnt[i]++;
        for (int i = 0; i < d.num_arcs(); i++) {
            if (d.arc(i).weight > 0) CHECK(cnt[i] == 1);
            CHECK(cnt[i] >= 1);
        }
    }
    CHECK(done >= 10);
}

TEST_CASE("lift of a doubled arc at tau=2") {
    WeightedDigraph d(2, "e2");
    d.add_arc(0, 1, 2);
    auto lr = lift(d, 2, {0, 0}, {0, 0});
    auto cls = classify_bipartite(lr.lifted, 2);
    CHECK(cls.is_weighted_tau_bipartite);
    CHECK(cls.is_sink_regular);
    auto mind = min_dicut_weight_flow(lr.lifted);
    CHECK(*mind >= 2);
    CHECK(lr.old_arcs.size() == 2);  // replication split the weight-2 arc
}

TEST_CASE("lift congruence violation rejected") {
    WeightedDigraph d(2, "e1");
    d.add_arc(0, 1, 1);
    CHECK_THROWS(lift(d, 2, {1, 0}, {0, 0}));
}

TEST_CASE("K3,3 lift is the identity (all vertices kept)") {
    auto d = k33();
    std::vector<long long> z(6, 0);
    auto lr = lift(d, 3, z, z);
    CHECK(lr.lifted.num_vertices() == 6);
    CHECK(lr.lifted.num_arcs() == 9);
}

TEST_CASE("lift round-trip: contracting new arcs recovers the replicated digraph") {
    std::mt19937 rng(17);
    int done = 0;
    for (int it = 0; it < 200 && done < 12; it++) {
        auto d = random_digraph(rng, 3 + (int)(rng() % 4), 4 + (int)(rng() % 6));
        auto mind = min_dicut_weight_flow(d);
        int t = 2 + (int)(rng() % 2);
        if (mind && *mind < t) continue;
        if (find_pseudo_cut_vertex(d)) continue;
        done++;
        int n = d.num_vertices();
        std::vector<long long> lp(n), lm(n, 0);
        for (int v = 0; v < n; v++) lp[v] = ((d.imbalance(v) % t) + t) % t;
        auto lr = lift(d, t, lp, lm);
        // contract everything outside the original arcs
        std::vector<char> is_old(lr.lifted.num_arcs(), 0);
        for (int i : lr.old_arcs) is_old[i] = 1;
        std::vector<int> newa;
        for (int i = 0; i < lr.lifted.num_arcs(); i++)
            if (!is_old[i]) newa.push_back(i);
        auto c = contract_arcs(lr.lifted, newa);
        Replication rep = replicate_weights(d);
        CHECK(c.digraph.num_vertices() == rep.digraph.num_vertices());
        // arc multiset between vertex classes must match
        auto key = [](const WeightedDigraph& g) {
            std::vector<std::tuple<int, int, long long>> k;
            for (const Arc& a : g.arcs()) k.push_back({a.tail, a.head, a.weight});
            std::sort(k.begin(), k.end());
            return k;
        };
        // map contracted vertices through the gadget origin
        std::vector<int> orig_of(c.digraph.num_vertices(), -1);
        for (int v = 0; v < lr.lifted.num_vertices(); v++)
            orig_of[c.vertex_map[v]] = lr.vertex_origin[v];
        WeightedDigraph relabeled(rep.digraph.num_vertices());
        for (const Arc& a : c.digraph.arcs())
            relabeled.add_arc(orig_of[a.tail], orig_of[a.head], a.weight);
        CHECK(key(relabeled) == key(rep.digraph));
        // every dicut of the input is a dicut of the lift (claim 3 direction 1)
        auto shores_in = enumerate_dicut_shores(rep.digraph);
        auto cls = classify_bipartite(lr.lifted, t);
        CHECK(cls.is_weighted_tau_bipartite);
        long long lifted_min = *min_dicut_weight_flow(lr.lifted);
        CHECK(lifted_min >= t);
        (void)shores_in;
    }
    CHECK(done >= 6);
}

TEST_CASE("decompose_and_lift sink-regular mode controls rho") {
    std::mt19937 rng(23);
    int done = 0;
    for (int it = 0; it < 300 && done < 15; it++) {
        auto d = random_digraph(rng, 3 + (int)(rng() % 5), 4 + (int)(rng() % 8));
        auto mind = min_dicut_weight_flow(d);
        int t = 2 + (int)(rng() % 2);
        if (!mind || *mind < t) continue;
        done++;
        auto dl = decompose_and_lift(d, t, LiftMode::sink_regular);
        for (auto& lr : dl.lifts) {
            auto cls = classify_bipartite(lr.lifted, t);
            CHECK(cls.is_weighted_tau_bipartite);
            CHECK(cls.is_sink_regular);
            CHECK(rho(t, lr.lifted) <= rho(t, d));
        }
    }
    CHECK(done >= 8);
}

TEST_CASE("decompose_and_lift balanced mode balances") {
    std::mt19937 rng(29);
    int done = 0;
    for (int it = 0; it < 300 && done < 10; it++) {
        auto d = random_digraph(rng, 3 + (int)(rng() % 4), 4 + (int)(rng() % 6));
        auto mind = min_dicut_weight_flow(d);
        if (!mind || *mind < 2) continue;
        done++;
        auto dl = decompose_and_lift(d, 2, LiftMode::balanced);
        for (auto& lr : dl.lifts) {
            auto cls = classify_bipartite(lr.lifted, 2);
            CHECK(cls.is_weighted_tau_bipartite);
            CHECK(cls.is_balanced);
        }
    }
    CHECK(done >= 5);
}

TEST_CASE("unweighted decompose-and-lift requires tau >= 3 and yields all-ones") {
    CHECK_THROWS(decompose_and_lift_unweighted(k33(), 2, LiftMode::sink_regular));
    auto dl = decompose_and_lift_unweighted(k33(), 3, LiftMode::sink_regular);
    REQUIRE(dl.lifts.size() == 1);
    for (const Arc& a : dl.lifts[0].lifted.arcs()) CHECK(a.weight == 1);
}

TEST_CASE("2-connected pieces from unweighted decomposition") {
    // two triangles sharing a vertex decompose into 2-connected pieces
    WeightedDigraph d(5, "bowtie");
    d.add_arc(0, 1, 1);
    d.add_arc(1, 2, 1);
    d.add_arc(2, 0, 1);
    d.add_arc(2, 3, 1);
    d.add_arc(3, 4, 1);
    d.add_arc(4, 2, 1);
    auto f = decompose_unweighted(d);
    CHECK(f.pieces.size() == 2);
    for (auto& p : f.pieces) CHECK(p.num_vertices() == 3);
}
