#include "dipack/gadget.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "dipack/maxflow.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"

namespace dipack {

static long long pos_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

static long long seq_count(const GadgetSpec& s, bool leaving, int w) {
    long long c = 0;
    for (const auto& e : s.seq)
        if (e.leaving == leaving && e.weight == w) c++;
    return c;
}

// unit sequence for attaching a layer of degree-tau vertices to `positions`:
// every position once (ascending), then the first `actives` positions again.
// Consecutive chunks of size tau become the new vertices; each chunk touches
// at least two distinct positions whenever the position span allows it.
static std::vector<long long> unit_sequence(const std::vector<long long>& positions,
                                            long long actives) {
    std::vector<long long> units = positions;
    for (long long i = 0; i < actives; i++) units.push_back(positions[i]);
    return units;
}

GadgetResult build_gadget(const GadgetSpec& spec) {
    const int t = spec.tau;
    if (t < 2) throw std::invalid_argument("gadget needs tau >= 2");
    if (spec.ell_plus < 0 || spec.ell_minus < 0) throw std::invalid_argument("ell >= 0");
    for (const auto& e : spec.seq)
        if (e.weight != 0 && e.weight != 1) throw std::invalid_argument("seq weights are 0/1");
    long long sm0 = seq_count(spec, false, 0), sm1 = seq_count(spec, false, 1);
    long long sp0 = seq_count(spec, true, 0), sp1 = seq_count(spec, true, 1);
    if (pos_mod(spec.ell_plus - spec.ell_minus - (sp1 - sm1), t) != 0)
        throw std::invalid_argument("ell+ - ell- incongruent to s(+,1)-s(-,1) mod tau");

    const long long kp = sm0 + sm1 + (long long)t * sp0 + (long long)(t - 1) * sp1;
    long long k = -1;
    for (long long cand = std::max(kp, sm0); cand <= std::max(kp, sm0) + 8 * t + 8; cand++) {
        if (pos_mod(cand - kp + spec.ell_minus, t) != 0) continue;
        if ((cand - sm0 + spec.ell_plus) % t != 0) continue;
        long long n1 = (cand - kp + spec.ell_minus) / t;
        long long n2 = (cand - sm0 + spec.ell_plus) / t;
        // every added source/sink needs >= 2 distinct neighbours, and no
        // position may carry more than two units
        if (spec.ell_minus > cand - kp || spec.ell_plus > cand - sm0) continue;
        if (n1 > 0 && cand - kp < 2) continue;
        if (n2 > 0 && cand - sm0 < 2) continue;
        k = cand;
        break;
    }
    if (k < 0) throw std::runtime_error("no feasible k found (internal)");
    const long long N1 = (k - kp + spec.ell_minus) / t;
    const long long N2 = (k - sm0 + spec.ell_plus) / t;

    GadgetResult g;
    g.k = k;
    g.k_prime = kp;

    // f(i): weighted count of earlier entries
    g.f.resize(spec.seq.size());
    {
        long long acc = 0;
        for (size_t i = 0; i < spec.seq.size(); i++) {
            g.f[i] = acc;
            const auto& e = spec.seq[i];
            if (!e.leaving)
                acc += 1;
            else
                acc += (e.weight == 1) ? t - 1 : t;
        }
        assert(acc == kp);
    }

    // vertex layout: a_0..a_k, b_0..b_k, a'_0..a'_k, b'_0..b'_k, then s_i, s'_i, t_j
    const int A = 0, B = (int)k + 1, AP = 2 * ((int)k + 1), BP = 3 * ((int)k + 1);
    int nv = 4 * ((int)k + 1);
    std::vector<int> s_of_entry(spec.seq.size(), -1);
    std::vector<int> sprime(N1), tsink(N2);
    for (size_t i = 0; i < spec.seq.size(); i++)
        if (spec.seq[i].leaving) s_of_entry[i] = nv++;
    for (long long i = 0; i < N1; i++) sprime[i] = nv++;
    for (long long j = 0; j < N2; j++) tsink[j] = nv++;

    WeightedDigraph d(nv, "gadget");
    g.coords.assign(nv, {0, 0});
    auto a = [&](long long i) { return A + (int)i; };
    auto b = [&](long long i) { return B + (int)i; };
    auto ap = [&](long long i) { return AP + (int)i; };
    auto bp = [&](long long i) { return BP + (int)i; };
    for (long long i = 0; i <= k; i++) {
        g.coords[a(i)] = {2.0 * i, 1};
        g.coords[b(i)] = {2.0 * i + 1, 1};
        g.coords[bp(i)] = {2.0 * i, 0};
        g.coords[ap(i)] = {2.0 * i + 1, 0};
    }

    const long long red = (t) / 2, green = (t - 1) / 2, orange = (t + 1) / 2;
    // red = ceil((t-1)/2), green = floor((t-1)/2), orange = ceil(t/2)
    for (long long i = 0; i <= k; i++) {
        d.add_arc(a(i), b(i), red);
        d.add_arc(ap(i), bp(i), red);
    }
    for (long long i = 1; i <= k; i++) {
        d.add_arc(a(i), b(i - 1), green);
        d.add_arc(ap(i - 1), bp(i), green);
    }
    d.add_arc(a(0), bp(0), orange);
    d.add_arc(ap(k), b(k), orange);
    for (long long i = 1; i <= k; i++) d.add_arc(a(i), bp(i), 1);

    // Step 2: rungs for (-,0) entries
    std::vector<char> rung_at(std::max<long long>(k, 1), 0);
    for (size_t i = 0; i < spec.seq.size(); i++)
        if (!spec.seq[i].leaving && spec.seq[i].weight == 0) {
            d.add_arc(ap(g.f[i]), b(g.f[i]), 1);
            rung_at[g.f[i]] = 1;
        }

    // Step 3: sources s_i and s'_i over the top side
    g.phi.assign(spec.seq.size(), -1);
    for (size_t i = 0; i < spec.seq.size(); i++) {
        const auto& e = spec.seq[i];
        if (e.leaving) {
            int s = s_of_entry[i];
            for (long long r = 0; r <= t - 1 - e.weight; r++) d.add_arc(s, b(g.f[i] + r), 1);
            g.coords[s] = {1.0 + 2.0 * g.f[i], 2};
            g.phi[i] = s;
        } else {
            g.phi[i] = b(g.f[i]);
        }
    }
    {
        std::vector<long long> positions;
        for (long long p = kp; p < k; p++) positions.push_back(p);
        auto units = unit_sequence(positions, spec.ell_minus);
        assert((long long)units.size() == t * N1);
        for (long long i = 0; i < N1; i++) {
            long long distinct = 0, prev = -1;
            for (int r = 0; r < t; r++) {
                long long p = units[i * t + r];
                d.add_arc(sprime[i], b(p), 1);
                if (p != prev) distinct++;
                prev = p;
            }
            g.n_parts.push_back(distinct);
            assert(distinct >= 2);
            g.coords[sprime[i]] = {1.0 + 2.0 * units[i * t], 2};
        }
    }

    // Step 4: sinks t_j over the bottom side (skipping rung positions)
    {
        std::vector<long long> positions;
        for (long long i = 0; i < k; i++)
            if (!(i < (long long)rung_at.size() && rung_at[i])) positions.push_back(i);
        assert((long long)positions.size() == k - sm0);
        auto units = unit_sequence(positions, spec.ell_plus);
        assert((long long)units.size() == t * N2);
        for (long long j = 0; j < N2; j++) {
            long long distinct = 0, prev = -1;
            for (int r = 0; r < t; r++) {
                long long p = units[j * t + r];
                d.add_arc(ap(p), tsink[j], 1);
                if (p != prev) distinct++;
                prev = p;
            }
            g.m_parts.push_back(distinct);
            assert(distinct >= 2);
            g.coords[tsink[j]] = {1.0 + 2.0 * units[j * t], -1};
        }
    }

    g.digraph = std::move(d);
    return g;
}

std::vector<std::string> check_gadget(const GadgetResult& g, const GadgetSpec& spec) {
    std::vector<std::string> bad;
    const WeightedDigraph& d = g.digraph;
    const int t = spec.tau;
    long long sm1 = seq_count(spec, false, 1), sp1 = seq_count(spec, true, 1);

    // (1) no opposite arcs; weight values from the allowed palette
    {
        std::vector<std::pair<int, int>> ends;
        for (const Arc& a : d.arcs()) ends.push_back({a.tail, a.head});
        std::sort(ends.begin(), ends.end());
        for (const Arc& a : d.arcs())
            if (std::binary_search(ends.begin(), ends.end(), std::make_pair(a.head, a.tail)))
                bad.push_back("opposite arcs present");
        long long red = t / 2, green = (t - 1) / 2, orange = (t + 1) / 2;
        for (const Arc& a : d.arcs()) {
            bool ok = a.weight == 1 || a.weight == 2 || a.weight == red || a.weight == green ||
                      a.weight == orange;
            if (!ok) bad.push_back("arc weight outside palette: " + std::to_string(a.weight));
            if (t >= 3 && a.weight == 0) bad.push_back("zero-weight arc with tau >= 3");
        }
    }
    // (2) bipartite with weighted degrees tau-1..tau+1
    auto cls = classify_bipartite(d, t);
    if (!cls.is_bipartite) bad.push_back("not bipartite");
    std::vector<long long> wd(d.num_vertices(), 0);
    for (int v = 0; v < d.num_vertices(); v++) wd[v] = d.weighted_degree(v);
    long long cnt_plus = 0, cnt_minus = 0, src_plus = 0, sink_plus = 0;
    for (int v = 0; v < d.num_vertices(); v++) {
        if (wd[v] < t - 1 || wd[v] > t + 1)
            bad.push_back("vertex degree " + std::to_string(wd[v]) + " outside tau-1..tau+1");
        if (wd[v] == t + 1) cnt_plus++;
        if (wd[v] == t - 1) cnt_minus++;
    }
    // (3) every dicut weight >= tau-1 (flow route; gadgets are large)
    auto mind = min_dicut_weight_flow(d);
    if (mind && *mind < t - 1)
        bad.push_back("dicut of weight " + std::to_string(*mind) + " < tau-1");
    // (4) tau+1 count and stability
    {
        std::vector<char> plus(d.num_vertices(), 0);
        for (int v = 0; v < d.num_vertices(); v++)
            if (wd[v] == t + 1) {
                plus[v] = 1;
                bool is_src = false;
                for (const Arc& a : d.arcs())
                    if (a.tail == v) is_src = true;
                (is_src ? src_plus : sink_plus)++;
            }
        if (cnt_plus != spec.ell_plus + spec.ell_minus)
            bad.push_back("count of degree tau+1 vertices != ell+ + ell-");
        if (src_plus != spec.ell_plus) bad.push_back("degree tau+1 source count != ell+");
        if (sink_plus != spec.ell_minus) bad.push_back("degree tau+1 sink count != ell-");
        for (const Arc& a : d.arcs())
            if (plus[a.tail] && plus[a.head]) bad.push_back("two degree tau+1 vertices adjacent");
    }
    // (5) tau-1 count
    if (cnt_minus != sm1 + sp1) bad.push_back("count of degree tau-1 vertices != s(+,1)+s(-,1)");
    // (7)-(8) internal-shore bounds used by lifting: any shore avoiding every
    // in-attachment and every weight-1 out-attachment must cut weight >= tau,
    // and symmetrically for complements avoiding out-attachments and weight-1
    // in-attachments. These close the case of a dicut living inside a single
    // gadget after substitution.
    {
        std::vector<long long> h(d.num_vertices(), 0);
        for (const Arc& a : d.arcs()) {
            h[a.tail] += a.weight;
            h[a.head] -= a.weight;
        }
        std::vector<int> forb_in, force_in;
        for (size_t i = 0; i < spec.seq.size(); i++) {
            const auto& e = spec.seq[i];
            if (!e.leaving || e.weight == 1) forb_in.push_back(g.phi[i]);
            if (e.leaving || e.weight == 1) force_in.push_back(g.phi[i]);
        }
        long long best_a = MaxFlow::INF;
        for (int v = 0; v < d.num_vertices(); v++) {
            bool bad_v = false;
            for (int f : forb_in) bad_v |= f == v;
            if (bad_v) continue;
            std::optional<ShoreMinResult> r;
            if (!forb_in.empty())
                r = closure_min(d, h, {v}, forb_in);
            else
                r = shore_min_modular(d, h);
            if (r) best_a = std::min(best_a, r->value);
            if (forb_in.empty()) break;
        }
        if (best_a < t) bad.push_back("internal shore of weight " + std::to_string(best_a) +
                                      " avoiding the in-attachments");
        long long best_b = MaxFlow::INF;
        if (!force_in.empty()) {
            for (int u = 0; u < d.num_vertices(); u++) {
                bool in_g = false;
                for (int f : force_in) in_g |= f == u;
                if (in_g) continue;
                auto r = closure_min(d, h, force_in, {u});
                if (r) best_b = std::min(best_b, r->value);
            }
        } else {
            auto r = shore_min_modular(d, h);
            if (r) best_b = r->value;
        }
        if (best_b < t) bad.push_back("complement-side shore of weight " +
                                      std::to_string(best_b) + " avoiding the out-attachments");
    }
    // (6) attachment types
    {
        std::vector<int> sorted_phi = g.phi;
        std::sort(sorted_phi.begin(), sorted_phi.end());
        if (std::adjacent_find(sorted_phi.begin(), sorted_phi.end()) != sorted_phi.end())
            bad.push_back("phi not injective");
        for (size_t i = 0; i < spec.seq.size(); i++) {
            int v = g.phi[i];
            bool is_src = false, is_sink = false;
            for (const Arc& a : d.arcs()) {
                if (a.tail == v) is_src = true;
                if (a.head == v) is_sink = true;
            }
            const auto& e = spec.seq[i];
            long long want = e.weight == 1 ? t - 1 : t;
            if (e.leaving && !(is_src && !is_sink)) bad.push_back("attachment should be a source");
            if (!e.leaving && !(is_sink && !is_src)) bad.push_back("attachment should be a sink");
            if (wd[v] != want)
                bad.push_back("attachment degree " + std::to_string(wd[v]) + " != expected " +
                              std::to_string(want));
        }
    }
    return bad;
}

GadgetResult tau3_simplify(const GadgetResult& g, const GadgetSpec& spec) {
    if (spec.tau != 3) throw std::invalid_argument("tau3_simplify needs a tau=3 gadget");
    for (const Arc& a : g.digraph.arcs())
        if (a.weight != 1 && a.weight != 2)
            throw std::invalid_argument("tau=3 gadget weights must be 1 or 2");
    {
        std::vector<std::pair<int, int>> ends;
        for (const Arc& a : g.digraph.arcs()) ends.push_back({a.tail, a.head});
        std::sort(ends.begin(), ends.end());
        for (const Arc& a : g.digraph.arcs())
            if (std::binary_search(ends.begin(), ends.end(), std::make_pair(a.head, a.tail)))
                throw std::invalid_argument("opposite arcs present");
    }
    GadgetResult out = g;
    int nv = g.digraph.num_vertices();
    std::vector<std::tuple<int, int, long long>> plain;
    std::vector<std::pair<int, int>> heavy;
    for (const Arc& a : g.digraph.arcs()) {
        if (a.weight == 2)
            heavy.push_back({a.tail, a.head});
        else
            plain.push_back({a.tail, a.head, a.weight});
    }
    int extra = (int)heavy.size() * 6;
    WeightedDigraph d(nv + extra, "gadget_simplified");
    out.coords.resize(nv + extra, {0, 0});
    for (auto [u, v, w] : plain) d.add_arc(u, v, w);
    int at = nv;
    for (auto [u, v] : heavy) {
        int x1 = at++, x2 = at++, x3 = at++, y1 = at++, y2 = at++, y3 = at++;
        d.add_arc(u, x1, 1);
        d.add_arc(u, x2, 1);
        d.add_arc(y1, x1, 1);
        d.add_arc(y1, x2, 1);
        d.add_arc(y1, x3, 1);
        d.add_arc(y2, x2, 1);
        d.add_arc(y2, x3, 1);
        d.add_arc(y2, v, 1);
        d.add_arc(y3, x3, 1);
        d.add_arc(y3, x1, 1);
        d.add_arc(y3, v, 1);
        double bx = (out.coords[u].first + out.coords[v].first) / 2;
        double by = (out.coords[u].second + out.coords[v].second) / 2;
        out.coords[x1] = {bx - 0.3, by + 0.2};
        out.coords[x2] = {bx, by + 0.2};
        out.coords[x3] = {bx + 0.3, by + 0.2};
        out.coords[y1] = {bx - 0.3, by - 0.2};
        out.coords[y2] = {bx, by - 0.2};
        out.coords[y3] = {bx + 0.3, by - 0.2};
    }
    out.digraph = std::move(d);
    return out;
}

}  // namespace dipack
