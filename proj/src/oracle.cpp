#include "dipack/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dipack/matroid.hpp"
#include "dipack/packing.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"

namespace dipack {

namespace {

struct SearchCtx {
    const WeightedDigraph* d;
    std::vector<std::uint64_t> cuts;  // minimal dicut arc masks
    long long nodes = 0;
    long long cap = 0;
};

// ---- cover-branching packing search (non-equitable) ----
bool cover_search(SearchCtx& ctx, std::vector<std::uint64_t>& members, std::uint64_t avail) {
    if (++ctx.nodes > ctx.cap) throw EnumCapExceeded("search node cap exceeded");
    int bj = -1;
    std::uint64_t bcand = 0;
    int bcnt = -1;
    for (size_t j = 0; j < members.size(); j++) {
        for (std::uint64_t c : ctx.cuts) {
            if (c & members[j]) continue;
            std::uint64_t cand = c & avail;
            int cnt = __builtin_popcountll(cand);
            if (cnt == 0) return false;
            if (bcnt < 0 || cnt < bcnt) {
                bcnt = cnt;
                bj = (int)j;
                bcand = cand;
            }
        }
        if (members[j] == 0) break;  // symmetry: fill empty members in order
    }
    if (bj < 0) return true;  // every member covers every minimal dicut
    std::uint64_t cand = bcand;
    while (cand) {
        int a = __builtin_ctzll(cand);
        cand &= cand - 1;
        members[bj] |= std::uint64_t(1) << a;
        std::uint64_t av = avail & ~(std::uint64_t(1) << a);
        if (cover_search(ctx, members, av)) return true;
        members[bj] &= ~(std::uint64_t(1) << a);
    }
    return false;
}

// ---- full-label DFS (equitable mode) ----
struct EqCtx {
    const WeightedDigraph* d;
    std::vector<std::uint64_t> cuts;
    std::vector<int> pool;  // weight-1 arcs
    int k = 0;
    long long nodes = 0, cap = 0;
    std::vector<int> label;  // per pool position: -1 unset, 0 unused, 1..k member
};

bool eq_feasible(EqCtx& ctx, size_t pos) {
    // per minimal dicut: coverage still possible and equitable window intact
    for (std::uint64_t c : ctx.cuts) {
        std::vector<int> cnt(ctx.k + 1, 0);
        int unset = 0;
        for (size_t i = 0; i < ctx.pool.size(); i++) {
            if (!((c >> ctx.pool[i]) & 1)) continue;
            if (i < pos)
                cnt[ctx.label[i]]++;
            else
                unset++;
        }
        for (int a = 1; a <= ctx.k; a++) {
            if (cnt[a] + unset < 1) return false;
            for (int b = 1; b <= ctx.k; b++)
                if (cnt[a] - (cnt[b] + unset) > 1) return false;
        }
    }
    return true;
}

bool eq_search(EqCtx& ctx, size_t pos) {
    if (++ctx.nodes > ctx.cap) throw EnumCapExceeded("search node cap exceeded");
    if (pos == ctx.pool.size()) {
        for (std::uint64_t c : ctx.cuts) {
            std::vector<int> cnt(ctx.k + 1, 0);
            for (size_t i = 0; i < ctx.pool.size(); i++)
                if ((c >> ctx.pool[i]) & 1) cnt[ctx.label[i]]++;
            int lo = cnt[1], hi = cnt[1];
            for (int a = 1; a <= ctx.k; a++) {
                lo = std::min(lo, cnt[a]);
                hi = std::max(hi, cnt[a]);
                if (cnt[a] < 1) return false;
            }
            if (hi - lo > 1) return false;
        }
        return true;
    }
    int used_max = 0;
    for (size_t i = 0; i < pos; i++) used_max = std::max(used_max, ctx.label[i]);
    for (int lab = 0; lab <= std::min(ctx.k, used_max + 1); lab++) {
        ctx.label[pos] = lab;
        if (eq_feasible(ctx, pos + 1) && eq_search(ctx, pos + 1)) return true;
    }
    ctx.label[pos] = -1;
    return false;
}

std::vector<std::uint64_t> minimal_cuts_of(const WeightedDigraph& d) {
    return minimal_dicut_masks(d, 4000000);
}

}  // namespace

std::optional<std::vector<std::vector<int>>> exhaustive_pack_search(const WeightedDigraph& d,
                                                                    int k, bool equitable,
                                                                    long long* nodes,
                                                                    long long node_cap) {
    if (k < 1) throw std::invalid_argument("k >= 1");
    Replication rep = replicate_weights(d);
    const WeightedDigraph& d0 = rep.digraph;
    if (d0.num_arcs() > 64) throw EnumCapExceeded("instance too large for exhaustive search");
    std::vector<int> pool;
    for (int i = 0; i < d0.num_arcs(); i++)
        if (d0.arc(i).weight == 1) pool.push_back(i);
    if (equitable && pool.size() > 26)
        throw EnumCapExceeded("equitable exhaustive search guarded to 26 weight-1 arcs");
    auto cuts = minimal_cuts_of(d0);
    std::optional<std::vector<std::vector<int>>> found;
    if (!equitable) {
        // members may only use weight-1 arcs
        std::uint64_t avail = 0;
        for (int i : pool) avail |= std::uint64_t(1) << i;
        // a dicut with no weight-1 arcs kills every packing
        for (std::uint64_t c : cuts)
            if ((c & avail) == 0) {
                if (nodes) *nodes = 0;
                return std::nullopt;
            }
        SearchCtx ctx{&d0, cuts, 0, node_cap};
        std::vector<std::uint64_t> members(k, 0);
        bool ok = cover_search(ctx, members, avail);
        if (nodes) *nodes = ctx.nodes;
        if (ok) {
            std::vector<std::vector<int>> out(k);
            for (int j = 0; j < k; j++)
                for (int i = 0; i < d0.num_arcs(); i++)
                    if ((members[j] >> i) & 1) out[j].push_back(rep.provenance[i]);
            found = out;
        }
    } else {
        EqCtx ctx;
        ctx.d = &d0;
        ctx.cuts = cuts;
        ctx.pool = pool;
        ctx.k = k;
        ctx.cap = node_cap;
        ctx.label.assign(pool.size(), -1);
        bool ok = eq_search(ctx, 0);
        if (nodes) *nodes = ctx.nodes;
        if (ok) {
            std::vector<std::vector<int>> out(k);
            for (size_t i = 0; i < pool.size(); i++)
                if (ctx.label[i] >= 1) out[ctx.label[i] - 1].push_back(rep.provenance[pool[i]]);
            found = out;
        }
    }
    if (found) {
        for (auto& J : *found) {
            std::sort(J.begin(), J.end());
            J.erase(std::unique(J.begin(), J.end()), J.end());
            if (!is_dijoin(d, J)) throw std::runtime_error("search produced a non-dijoin");
        }
    }
    return found;
}

namespace {

struct PartCtx {
    std::vector<std::uint64_t> cuts;          // minimal dicut masks restricted to pool bits
    std::vector<std::vector<int>> by_arc;     // pool position -> cut ids containing it
    std::vector<std::array<int, 8>> cnt;      // per cut: count per color (k <= 7)
    std::vector<int> unset;                   // per cut: unassigned pool arcs in it
    int k = 0;
    long long nodes = 0, cap = 0;
    std::vector<int> order;  // pool positions in assignment order
    std::vector<int> color;  // per pool position
};

bool part_search(PartCtx& ctx, size_t pos) {
    if (++ctx.nodes > ctx.cap) throw EnumCapExceeded("search node cap exceeded");
    if (pos == ctx.order.size()) return true;
    int p = ctx.order[pos];
    int used_max = 0;
    for (size_t i = 0; i < pos; i++) used_max = std::max(used_max, ctx.color[ctx.order[i]] + 1);
    int limit = std::min(ctx.k, used_max + 1);
    for (int c = 0; c < limit; c++) {
        ctx.color[p] = c;
        bool ok = true;
        for (int cut : ctx.by_arc[p]) {
            ctx.cnt[cut][c]++;
            ctx.unset[cut]--;
        }
        for (int cut : ctx.by_arc[p]) {
            int missing = 0;
            for (int a = 0; a < ctx.k; a++)
                if (ctx.cnt[cut][a] == 0) missing++;
            if (missing > ctx.unset[cut]) {
                ok = false;
                break;
            }
        }
        if (ok && part_search(ctx, pos + 1)) return true;
        for (int cut : ctx.by_arc[p]) {
            ctx.cnt[cut][c]--;
            ctx.unset[cut]++;
        }
        ctx.color[p] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> exhaustive_partition_search(
    const WeightedDigraph& d, const std::vector<int>& pool, int k, long long* nodes,
    long long node_cap) {
    if (k < 1 || k > 7) throw std::invalid_argument("k in 1..7");
    if (d.num_arcs() > 64) throw EnumCapExceeded("instance too large");
    auto cuts_all = minimal_cuts_of(d);
    std::uint64_t poolmask = 0;
    for (int i : pool) poolmask |= std::uint64_t(1) << i;
    PartCtx ctx;
    for (std::uint64_t c : cuts_all) {
        std::uint64_t cp = c & poolmask;
        if (__builtin_popcountll(cp) < k) {
            if (nodes) *nodes = 0;
            return std::nullopt;  // cannot see all k colors
        }
        ctx.cuts.push_back(cp);
    }
    std::sort(ctx.cuts.begin(), ctx.cuts.end());
    ctx.cuts.erase(std::unique(ctx.cuts.begin(), ctx.cuts.end()), ctx.cuts.end());
    std::vector<int> pos_of(d.num_arcs(), -1);
    for (size_t i = 0; i < pool.size(); i++) pos_of[pool[i]] = (int)i;
    ctx.by_arc.assign(pool.size(), {});
    ctx.cnt.assign(ctx.cuts.size(), {});
    ctx.unset.assign(ctx.cuts.size(), 0);
    for (size_t cid = 0; cid < ctx.cuts.size(); cid++) {
        std::uint64_t c = ctx.cuts[cid];
        while (c) {
            int a = __builtin_ctzll(c);
            c &= c - 1;
            ctx.by_arc[pos_of[a]].push_back((int)cid);
            ctx.unset[cid]++;
        }
    }
    // assignment order: most-constrained arcs first (smallest containing cut)
    std::vector<int> key(pool.size(), 1 << 30);
    for (size_t cid = 0; cid < ctx.cuts.size(); cid++) {
        int sz = __builtin_popcountll(ctx.cuts[cid]);
        std::uint64_t c = ctx.cuts[cid];
        while (c) {
            int a = __builtin_ctzll(c);
            c &= c - 1;
            key[pos_of[a]] = std::min(key[pos_of[a]], sz);
        }
    }
    ctx.order.resize(pool.size());
    for (size_t i = 0; i < pool.size(); i++) ctx.order[i] = (int)i;
    std::stable_sort(ctx.order.begin(), ctx.order.end(),
                     [&](int a, int b) { return key[a] < key[b]; });
    ctx.k = k;
    ctx.cap = node_cap;
    ctx.color.assign(pool.size(), -1);
    bool ok = part_search(ctx, 0);
    if (nodes) *nodes = ctx.nodes;
    if (!ok) return std::nullopt;
    std::vector<std::vector<int>> out(k);
    for (size_t i = 0; i < pool.size(); i++) out[ctx.color[i]].push_back(pool[i]);
    for (auto& J : out)
        if (!is_dijoin(d, J)) throw std::runtime_error("partition member not a dijoin");
    return out;
}

int exhaustive_nu(const WeightedDigraph& d, int upper, long long* nodes) {
    long long total = 0;
    int best = 0;
    for (int k = 1; k <= upper; k++) {
        long long n = 0;
        auto r = exhaustive_pack_search(d, k, false, &n);
        total += n;
        if (!r) break;
        best = k;
    }
    if (nodes) *nodes = total;
    return best;
}

// ---- claim validation ----

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::istringstream is(s);
    std::vector<int> out;
    int x;
    while (is >> x) out.push_back(x);
    return out;
}

std::vector<int> labels_to_ids(const Instance& inst, const std::string& s) {
    std::istringstream is(s);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        int v = inst.vertex_by_label(tok);
        if (v < 0) throw std::invalid_argument("unknown vertex label in claim: " + tok);
        out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<VerificationReport> validate_instance_claims(const Instance& inst, bool deep) {
    std::vector<VerificationReport> out;
    const WeightedDigraph& d = inst.digraph;
    auto add = [&](const std::string& claim, bool ok, const std::string& detail) {
        out.push_back({claim, ok, detail});
    };
    for (auto& [key, val] : inst.claims) {
        bool is_deep = key.rfind("deep_", 0) == 0;
        if (is_deep && !deep) continue;
        try {
            if (key == "vertices") {
                add(key, d.num_vertices() == std::stoi(val), std::to_string(d.num_vertices()));
            } else if (key == "arcs") {
                add(key, d.num_arcs() == std::stoi(val), std::to_string(d.num_arcs()));
            } else if (key == "connected") {
                add(key, d.connected_underlying() == (val == "true"), "");
            } else if (key == "tau") {
                auto t = tau(d);
                bool ok = t && *t == std::stoll(val);
                add(key, ok, t ? std::to_string(*t) : "infinity");
            } else if (key.rfind("rho", 0) == 0 && key.size() > 3) {
                int t = std::stoi(key.substr(3));
                add(key, rho(t, d) == std::stoll(val), std::to_string(rho(t, d)));
            } else if (key == "sink_regular") {
                int t = std::stoi(val);
                auto cls = classify_bipartite(d, t);
                add(key, cls.is_weighted_tau_bipartite && cls.is_sink_regular,
                    cls.diagnostics.empty() ? "" : cls.diagnostics[0]);
            } else if (key == "actives") {
                // count of weighted-degree tau+1 vertices; tau from the tau claim
                auto tv = inst.claim("tau");
                int t = tv ? std::stoi(*tv) : 2;
                auto cls = classify_bipartite(d, t);
                add(key, (int)cls.active.size() == std::stoi(val),
                    std::to_string(cls.active.size()));
            } else if (key == "q1" || key == "q2" || key == "q3") {
                add(key, !labels_to_ids(inst, val).empty(), "");
            } else if (key == "jstar") {
                auto js = parse_ints(val);
                bool ok = true;
                for (int i : js) ok &= i >= 0 && i < d.num_arcs();
                add(key, ok, std::to_string(js.size()) + " arcs");
            } else if (key == "jstar_minimal_dijoin") {
                auto js = parse_ints(*inst.claim("jstar"));
                bool ok = is_dijoin(d, js);
                for (size_t i = 0; i < js.size() && ok; i++) {
                    std::vector<int> sub;
                    for (size_t l = 0; l < js.size(); l++)
                        if (l != i) sub.push_back(js[l]);
                    ok &= !is_dijoin(d, sub);
                }
                add(key, ok, "");
            } else if (key == "jstar_rest_k_dijoin") {
                auto js = parse_ints(*inst.claim("jstar"));
                std::vector<char> in(d.num_arcs(), 0);
                for (int i : js) in[i] = 1;
                std::vector<int> rest;
                for (int i = 0; i < d.num_arcs(); i++)
                    if (!in[i]) rest.push_back(i);
                auto cov = min_dicut_coverage(d, rest);
                add(key, cov && *cov >= std::stoll(val), cov ? std::to_string(*cov) : "inf");
            } else if (key == "m1_bases_q") {
                auto tv = inst.claim("tau");
                int t = std::stoi(*tv);
                bool ok = true;
                for (const char* qk : {"q1", "q2", "q3"}) {
                    auto q = inst.claim(qk);
                    if (!q) continue;
                    ok &= m1_is_basis_flow(d, t, labels_to_ids(inst, *q));
                }
                add(key, ok, "");
            } else if (key == "m1_q1q2_mk4") {
                auto tv = inst.claim("tau");
                int t = std::stoi(*tv);
                InstanceMatroid im = build_instance_matroid(d, t, 1);
                ExplicitMatroid m1 = im.explicit_matroid("M1");
                auto q1 = labels_to_ids(inst, *inst.claim("q1"));
                auto q2 = labels_to_ids(inst, *inst.claim("q2"));
                std::uint32_t sub = 0;
                for (int v : q1)
                    for (size_t i = 0; i < im.ground.size(); i++)
                        if (im.ground[i] == v) sub |= 1u << i;
                for (int v : q2)
                    for (size_t i = 0; i < im.ground.size(); i++)
                        if (im.ground[i] == v) sub |= 1u << i;
                bool ok = is_mk4_restriction(m1, sub);
                ExplicitMatroid r = m1.restriction(sub);
                ok &= !is_strongly_base_orderable(r);
                add(key, ok, "");
            } else if (key == "m1_exchanges_q1_q2") {
                auto tv = inst.claim("tau");
                int t = std::stoi(*tv);
                InstanceMatroid im = build_instance_matroid(d, t, 1);
                ExplicitMatroid m1 = im.explicit_matroid("M1");
                auto q1 = labels_to_ids(inst, *inst.claim("q1"));
                auto q2 = labels_to_ids(inst, *inst.claim("q2"));
                auto gpos = [&](int v) {
                    for (size_t i = 0; i < im.ground.size(); i++)
                        if (im.ground[i] == v) return (int)i;
                    return -1;
                };
                std::uint32_t b1 = 0, b2 = 0;
                for (int v : q1) b1 |= 1u << gpos(v);
                for (int v : q2) b2 |= 1u << gpos(v);
                // expected pairs "u:v" with labels; collect actual pairs
                std::set<std::pair<std::string, std::string>> want;
                {
                    std::istringstream is(val);
                    std::string tok;
                    while (is >> tok) {
                        auto c = tok.find(':');
                        want.insert({tok.substr(0, c), tok.substr(c + 1)});
                    }
                }
                std::set<std::pair<std::string, std::string>> got;
                for (int u = 0; u < m1.n; u++) {
                    if (!((b2 >> u) & 1)) continue;
                    for (int v : symmetric_exchange_partners(m1, b2, b1, u))
                        got.insert({inst.labels[im.ground[u]], inst.labels[im.ground[v]]});
                }
                add(key, got == want, std::to_string(got.size()) + " pairs");
            } else if (key == "deep_no_partition_rest") {
                auto js = parse_ints(*inst.claim("jstar"));
                std::vector<char> in(d.num_arcs(), 0);
                for (int i : js) in[i] = 1;
                std::vector<int> rest;
                for (int i = 0; i < d.num_arcs(); i++)
                    if (!in[i]) rest.push_back(i);
                long long n = 0;
                auto r = exhaustive_partition_search(d, rest, std::stoi(val), &n);
                add(key, !r.has_value(), "nodes=" + std::to_string(n));
            } else if (key == "deep_partition_all") {
                std::vector<int> all(d.num_arcs());
                for (int i = 0; i < d.num_arcs(); i++) all[i] = i;
                long long n = 0;
                auto r = exhaustive_partition_search(d, all, std::stoi(val), &n);
                add(key, r.has_value(), "nodes=" + std::to_string(n));
            } else if (key == "deep_nu") {
                long long n = 0;
                int want = std::stoi(val);
                int got = exhaustive_nu(d, want + 1, &n);
                add(key, got == want, "nu=" + std::to_string(got) + " nodes=" + std::to_string(n));
            } else if (key == "deep_no_equitable_packing") {
                long long n = 0;
                auto r = exhaustive_pack_search(d, std::stoi(val), true, &n);
                add(key, !r.has_value(), "nodes=" + std::to_string(n));
            } else if (key == "deep_packing_exists") {
                long long n = 0;
                auto r = exhaustive_pack_search(d, std::stoi(val), false, &n);
                add(key, r.has_value(), "nodes=" + std::to_string(n));
            } else {
                add(key, false, "unknown claim key");
            }
        } catch (const std::exception& e) {
            add(key, false, std::string("error: ") + e.what());
        }
    }
    return out;
}

Instance load_validated(const std::string& name_or_path, bool deep) {
    Instance inst = load_instance(name_or_path);
    auto reports = validate_instance_claims(inst, deep);
    for (auto& r : reports)
        if (!r.ok)
            throw std::runtime_error("instance '" + inst.name + "' failed claim '" + r.claim +
                                     "' (" + r.detail + ")");
    return inst;
}

}  // namespace dipack
