#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dipack/gadget.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"
#include "testutil.hpp"

using namespace dipack;

static GadgetSpec make_spec(int t, const std::vector<std::pair<char, int>>& seq, long long lp,
                            long long lm) {
    GadgetSpec s;
    s.tau = t;
    s.ell_plus = lp;
    s.ell_minus = lm;
    for (auto [c, w] : seq) s.seq.push_back({c == '+', w});
    return s;
}

TEST_CASE("tau=2 in/out weight-0 pair") {
    auto spec = make_spec(2, {{'-', 0}, {'+', 0}}, 0, 0);
    auto g = build_gadget(spec);
    auto bad = check_gadget(g, spec);
    for (auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
    // exactly zero degree tau+1 and zero degree tau-1 vertices
    int plus = 0, minus = 0;
    for (int v = 0; v < g.digraph.num_vertices(); v++) {
        auto wd = g.digraph.weighted_degree(v);
        if (wd == 3) plus++;
        if (wd == 1) minus++;
    }
    CHECK(plus == 0);
    CHECK(minus == 0);
}

TEST_CASE("tau=3 two weight-1 slots") {
    auto spec = make_spec(3, {{'+', 1}, {'-', 1}}, 0, 0);
    auto g = build_gadget(spec);
    auto bad = check_gadget(g, spec);
    for (auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
    int minus = 0;
    for (int v = 0; v < g.digraph.num_vertices(); v++)
        if (g.digraph.weighted_degree(v) == 2) minus++;
    CHECK(minus == 2);
    auto mind = min_dicut_weight_flow(g.digraph);
    CHECK(*mind >= 2);
}

TEST_CASE("congruence violation rejected") {
    auto spec = make_spec(2, {{'+', 1}}, 0, 0);
    CHECK_THROWS(build_gadget(spec));
}

TEST_CASE("randomized gadget checker across tau") {
    std::mt19937 rng(99);
    for (int t = 2; t <= 5; t++) {
        for (int it = 0; it < 12; it++) {
            GadgetSpec spec;
            spec.tau = t;
            int len = (int)(rng() % 6);
            for (int i = 0; i < len; i++)
                spec.seq.push_back({(rng() % 2) == 0, (int)(rng() % 2)});
            long long sp1 = 0, sm1 = 0;
            for (auto& e : spec.seq) (e.leaving ? sp1 : sm1) += e.weight;
            spec.ell_minus = (long long)(rng() % 3);
            long long base = sp1 - sm1 + spec.ell_minus;
            spec.ell_plus = ((base % t) + t) % t + (long long)(rng() % 2) * t;
            auto g = build_gadget(spec);
            auto bad = check_gadget(g, spec);
            for (auto& b : bad) MESSAGE("tau=", t, " ", b);
            CHECK(bad.empty());
        }
    }
}

TEST_CASE("tau3 simplify produces an all-unit gadget passing the checker") {
    std::mt19937 rng(7);
    for (int it = 0; it < 10; it++) {
        GadgetSpec spec;
        spec.tau = 3;
        int len = (int)(rng() % 5);
        for (int i = 0; i < len; i++) spec.seq.push_back({(rng() % 2) == 0, (int)(rng() % 2)});
        long long sp1 = 0, sm1 = 0;
        for (auto& e : spec.seq) (e.leaving ? sp1 : sm1) += e.weight;
        spec.ell_minus = (long long)(rng() % 2);
        spec.ell_plus = (((sp1 - sm1 + spec.ell_minus) % 3) + 3) % 3;
        auto g = build_gadget(spec);
        auto s = tau3_simplify(g, spec);
        bool had_heavy = false;
        for (const Arc& a : g.digraph.arcs()) had_heavy |= a.weight == 2;
        if (had_heavy) CHECK(s.digraph.num_vertices() > g.digraph.num_vertices());
        for (const Arc& a : s.digraph.arcs()) CHECK(a.weight == 1);
        auto bad = check_gadget(s, spec);
        for (auto& b : bad) MESSAGE(b);
        CHECK(bad.empty());
    }
}

TEST_CASE("tau != 3 simplify rejected") {
    auto spec = make_spec(4, {{'-', 0}}, 0, 0);
    spec.ell_plus = 1;
    spec.ell_minus = 1;
    auto g = build_gadget(spec);
    CHECK_THROWS(tau3_simplify(g, spec));
}
