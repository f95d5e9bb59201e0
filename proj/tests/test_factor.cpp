#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dipack/factor.hpp"
#include "testutil.hpp"

using namespace dipack;
using namespace dipack::testutil;

TEST_CASE("de Werra degree contract") {
    std::mt19937 rng(8);
    for (int it = 0; it < 200; it++) {
        int nl = 1 + (int)(rng() % 4), nr = 1 + (int)(rng() % 4);
        int n = nl + nr;
        std::vector<char> side(n, 0);
        for (int v = nl; v < n; v++) side[v] = 1;
        std::vector<std::pair<int, int>> edges;
        int m = (int)(rng() % 14);
        for (int e = 0; e < m; e++)
            edges.push_back({(int)(rng() % nl), nl + (int)(rng() % nr)});
        int k = 1 + (int)(rng() % 4);
        auto parts = dewerra_partition(n, edges, side, k);
        REQUIRE((int)parts.size() == k);
        std::vector<int> deg(n, 0);
        for (auto& [u, v] : edges) {
            deg[u]++;
            deg[v]++;
        }
        std::vector<char> seen(m, 0);
        for (auto& p : parts) {
            std::vector<int> pd(n, 0);
            for (int e : p) {
                CHECK(!seen[e]);
                seen[e] = 1;
                pd[edges[e].first]++;
                pd[edges[e].second]++;
            }
            for (int v = 0; v < n; v++) {
                CHECK(pd[v] >= deg[v] / k);
                CHECK(pd[v] <= (deg[v] + k - 1) / k);
            }
        }
        for (int e = 0; e < m; e++) CHECK(seen[e]);
    }
}

TEST_CASE("K3,3 rounded factors are perfect matchings") {
    auto d = k33();
    auto fs = rounded_one_factor_partition(d, 3);
    REQUIRE(fs.size() == 3);
    for (auto& f : fs) {
        CHECK(f.arcs.size() == 3);
        CHECK(f.dyad_centers.empty());
        CHECK(is_rounded_one_factor(d, 3, f.arcs));
    }
}

TEST_CASE("star with 5 edges splits 2/3") {
    // de Werra on a 5-edge star, k=2
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 5; i++) edges.push_back({0, i});
    std::vector<char> side(6, 1);
    side[0] = 0;
    auto parts = dewerra_partition(6, edges, side, 2);
    std::vector<size_t> sz = {parts[0].size(), parts[1].size()};
    std::sort(sz.begin(), sz.end());
    CHECK(sz[0] == 2);
    CHECK(sz[1] == 3);
}

TEST_CASE("rounded factor invariants on random sink-regular instances") {
    std::mt19937 rng(12);
    int done = 0;
    for (int it = 0; it < 500 && done < 50; it++) {
        int t = 2 + (int)(rng() % 3);
        int r = (int)(rng() % 3);
        auto od = random_sink_regular(rng, t, r, (int)(rng() % 3));
        if (!od) continue;
        done++;
        const auto& d = *od;
        auto disc = discrepancy_vector(d);
        long long discV = 0;
        for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
        CHECK(discV == rho(t, d));  // Lemma: rho = disc(V) when sink-regular
        auto fs = rounded_one_factor_partition(d, t);
        REQUIRE((int)fs.size() == t);
        long long dyads = 0;
        for (auto& f : fs) {
            CHECK(is_rounded_one_factor(d, t, f.arcs));
            CHECK((long long)f.dyad_centers.size() == discV);
            dyads += f.dyad_centers.size();
            // cut-counting identity on every shore: |J cap cut| = |dc cap U| - disc(U)
            for (auto U : brute_shores(d)) {
                long long cutc = 0;
                for (int i : f.arcs) {
                    const Arc& a = d.arc(i);
                    if (((U >> a.tail) & 1) && !((U >> a.head) & 1)) cutc++;
                }
                long long dcU = 0, dU = 0;
                for (int v = 0; v < d.num_vertices(); v++)
                    if ((U >> v) & 1) dU += disc[v];
                for (int v : f.dyad_centers)
                    if ((U >> v) & 1) dcU++;
                CHECK(cutc == dcU - dU);
            }
        }
        CHECK(dyads == (long long)t * discV);
        // dicut shore discrepancy bound: disc(U) <= disc(V) - 1
        for (auto U : brute_shores(d)) {
            long long dU = 0;
            for (int v = 0; v < d.num_vertices(); v++)
                if ((U >> v) & 1) dU += disc[v];
            CHECK(dU <= discV - 1);
            long long wcut = cut_weight(d, U);
            long long aU = 0;
            for (int v : classify_bipartite(d, t).active)
                if ((U >> v) & 1) aU++;
            CHECK(wcut == aU - t * dU);
        }
    }
    CHECK(done >= 30);
}

TEST_CASE("alternating decomposition and path swaps") {
    std::mt19937 rng(14);
    int done = 0;
    for (int it = 0; it < 500 && done < 40; it++) {
        int t = 2 + (int)(rng() % 2);
        auto od = random_sink_regular(rng, t, 1 + (int)(rng() % 2), (int)(rng() % 2));
        if (!od) continue;
        const auto& d = *od;
        auto fs = rounded_one_factor_partition(d, t);
        if (fs.size() < 2) continue;
        done++;
        auto alt = alternating_decomposition(d, t, fs[0], fs[1]);
        // path count = |Q1 triangle Q2| / 2
        std::vector<int> q1 = fs[0].dyad_centers, q2 = fs[1].dyad_centers;
        std::vector<int> sym;
        std::set_symmetric_difference(q1.begin(), q1.end(), q2.begin(), q2.end(),
                                      std::back_inserter(sym));
        CHECK(alt.paths.size() == sym.size() / 2);
        for (auto& p : alt.paths) {
            CHECK(std::binary_search(q1.begin(), q1.end(), p.from));
            CHECK(!std::binary_search(q2.begin(), q2.end(), p.from));
            CHECK(std::binary_search(q2.begin(), q2.end(), p.to));
            CHECK(!std::binary_search(q1.begin(), q1.end(), p.to));
        }
        // swapping any subset of paths keeps both rounded 1-factors
        for (std::uint32_t s = 0; s < (1u << std::min<size_t>(alt.paths.size(), 4)); s++) {
            std::vector<int> chosen;
            for (size_t i = 0; i < alt.paths.size(); i++)
                if ((s >> i) & 1) chosen.push_back((int)i);
            auto [g1, g2] = apply_path_swap(d, fs[0], fs[1], alt, chosen);
            CHECK(is_rounded_one_factor(d, t, g1.arcs));
            CHECK(is_rounded_one_factor(d, t, g2.arcs));
        }
    }
    CHECK(done >= 20);
}

TEST_CASE("J1 = J2 gives empty decomposition") {
    auto d = k33();
    auto fs = rounded_one_factor_partition(d, 3);
    auto alt = alternating_decomposition(d, 3, fs[0], fs[0]);
    CHECK(alt.paths.empty());
    CHECK(alt.cycle.empty());
}

TEST_CASE("disjoint perfect matchings in a 4-cycle give one circuit") {
    // sources 0,1; sinks 2,3; arcs form an undirected 4-cycle
    WeightedDigraph d(4);
    d.add_arc(0, 2, 1);
    d.add_arc(0, 3, 1);
    d.add_arc(1, 2, 1);
    d.add_arc(1, 3, 1);
    RoundedOneFactor j1{{0, 3}, {}}, j2{{1, 2}, {}};
    j1.dyad_centers = dyad_centers_of(d, j1.arcs);
    j2.dyad_centers = dyad_centers_of(d, j2.arcs);
    auto alt = alternating_decomposition(d, 2, j1, j2);
    CHECK(alt.paths.empty());
    CHECK(alt.cycle.size() == 4);
}

TEST_CASE("equitable rho<=1 packing on K3,3") {
    auto d = k33();
    auto pk = equitable_packing_rho_le_1(d, 3);
    REQUIRE(pk.dijoins.size() == 3);
    CHECK(is_weighted_packing(d, pk.dijoins));
    CHECK(is_equitable(d, pk.dijoins));
}

TEST_CASE("dyad dijoin criterion on random instances") {
    // a rounded 1-factor is a dijoin iff |dc cap U| >= 1 + disc(U) on every shore
    std::mt19937 rng(15);
    int done = 0;
    for (int it = 0; it < 400 && done < 40; it++) {
        int t = 2 + (int)(rng() % 2);
        auto od = random_sink_regular(rng, t, 1 + (int)(rng() % 2), (int)(rng() % 2));
        if (!od) continue;
        done++;
        const auto& d = *od;
        auto disc = discrepancy_vector(d);
        auto fs = rounded_one_factor_partition(d, t);
        for (auto& f : fs) {
            bool crit = true;
            for (auto U : brute_shores(d)) {
                long long dU = 0, dcU = 0;
                for (int v = 0; v < d.num_vertices(); v++)
                    if ((U >> v) & 1) dU += disc[v];
                for (int v : f.dyad_centers)
                    if ((U >> v) & 1) dcU++;
                if (dcU < 1 + dU) crit = false;
            }
            CHECK(is_dijoin(d, f.arcs) == crit);
        }
    }
    CHECK(done >= 25);
}

TEST_CASE("imbalance gcd") {
    CHECK(imbalance_gcd(k33()) == 3);
    WeightedDigraph one(2);
    one.add_arc(0, 1, 1);
    CHECK(imbalance_gcd(one) == 1);
    CHECK(imbalance_gcd(directed_cycle(3)) == 0);
}
