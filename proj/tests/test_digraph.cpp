#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dipack/digraph.hpp"
#include "testutil.hpp"

using namespace dipack;
using namespace dipack::testutil;

TEST_CASE("construction guards") {
    WeightedDigraph d(3);
    CHECK_THROWS(d.add_arc(0, 0));
    CHECK_THROWS(d.add_arc(0, 3));
    CHECK_THROWS(d.add_arc(0, 1, -1));
    d.add_arc(0, 1, 2);
    d.add_arc(1, 0, 1);  // opposite arcs fine
    d.add_arc(0, 1, 1);  // parallel arcs fine
    CHECK(d.num_arcs() == 3);
    CHECK(d.weighted_out_degree(0) == 3);
    CHECK(d.imbalance(0) == 2);
}

TEST_CASE("replicate_weights") {
    WeightedDigraph d(2);
    d.add_arc(0, 1, 3);
    auto r = replicate_weights(d);
    CHECK(r.digraph.num_arcs() == 3);
    for (const Arc& a : r.digraph.arcs()) CHECK(a.weight == 1);
    CHECK(r.replicas[0].size() == 3);
    CHECK(r.provenance == std::vector<int>({0, 0, 0}));

    WeightedDigraph z(2);
    z.add_arc(0, 1, 0);
    auto rz = replicate_weights(z);
    CHECK(rz.digraph.num_arcs() == 1);
    CHECK(rz.digraph.arc(0).weight == 0);
}

TEST_CASE("reverse is an involution") {
    std::mt19937 rng(3);
    for (int it = 0; it < 50; it++) {
        auto d = random_digraph(rng, 4 + (int)(rng() % 6), 5 + (int)(rng() % 10), 3);
        auto rr = reverse(reverse(d));
        REQUIRE(rr.num_arcs() == d.num_arcs());
        for (int i = 0; i < d.num_arcs(); i++) {
            CHECK(rr.arc(i).tail == d.arc(i).tail);
            CHECK(rr.arc(i).head == d.arc(i).head);
            CHECK(rr.arc(i).weight == d.arc(i).weight);
        }
    }
}

TEST_CASE("contract path to single arc") {
    auto p = path(3);
    auto c = contract_arcs(p, {0});
    CHECK(c.digraph.num_vertices() == 2);
    CHECK(c.digraph.num_arcs() == 1);
    CHECK(c.old_to_new[0] == -1);
    CHECK(c.old_to_new[1] == 0);
}

TEST_CASE("contraction drops loops") {
    WeightedDigraph d(3);
    d.add_arc(0, 1, 1);
    d.add_arc(1, 0, 1);
    d.add_arc(1, 2, 1);
    auto c = contract_arcs(d, {0});
    CHECK(c.digraph.num_vertices() == 2);
    CHECK(c.digraph.num_arcs() == 1);  // the opposite arc became a loop
}

TEST_CASE("delete_arcs keeps indices stable through the map") {
    auto d = k33();
    auto del = delete_arcs(d, {0, 4});
    CHECK(del.digraph.num_arcs() == 7);
    CHECK(del.old_to_new[0] == -1);
    CHECK(del.old_to_new[1] == 0);
    CHECK(del.old_to_new[8] == 6);
}

TEST_CASE("identify_vertices") {
    auto d = k33();
    std::vector<char> in(6, 0);
    in[0] = in[1] = 1;
    auto c = identify_vertices(d, in);
    CHECK(c.digraph.num_vertices() == 5);
    CHECK(c.digraph.num_arcs() == 9);  // all arcs survive (parallel now)
}

TEST_CASE("connected_underlying") {
    CHECK(k33().connected_underlying());
    WeightedDigraph d(4);
    d.add_arc(0, 1, 1);
    d.add_arc(2, 3, 1);
    CHECK(!d.connected_underlying());
}
