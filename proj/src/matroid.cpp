#include "dipack/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "dipack/bmatching.hpp"
#include "dipack/shoremin.hpp"
#include "dipack/shores.hpp"

namespace dipack {

int ExplicitMatroid::rank() const {
    return bases.empty() ? 0 : __builtin_popcount(bases[0]);
}

bool ExplicitMatroid::is_basis(std::uint32_t q) const {
    return std::binary_search(bases.begin(), bases.end(), q);
}

bool ExplicitMatroid::independent(std::uint32_t q) const {
    for (std::uint32_t b : bases)
        if ((q & b) == q) return true;
    return false;
}

bool ExplicitMatroid::exchange_axiom_holds() const {
    if (bases.empty()) return false;
    int r = rank();
    for (std::uint32_t b : bases)
        if (__builtin_popcount(b) != r) return false;
    for (std::uint32_t b1 : bases)
        for (std::uint32_t b2 : bases) {
            std::uint32_t d1 = b1 & ~b2;
            for (int u = 0; u < n; u++) {
                if (!((d1 >> u) & 1)) continue;
                bool found = false;
                std::uint32_t d2 = b2 & ~b1;
                for (int v = 0; v < n && !found; v++)
                    if ((d2 >> v) & 1)
                        found = is_basis((b1 ^ (1u << u)) | (1u << v));
                if (!found) return false;
            }
        }
    return true;
}

std::string ExplicitMatroid::serialize() const {
    std::ostringstream os;
    os << "matroid " << (name.empty() ? "m" : name) << " " << n << "\n";
    for (std::uint32_t b : bases) {
        bool first = true;
        for (int v = 0; v < n; v++)
            if ((b >> v) & 1) {
                if (!first) os << " ";
                os << v;
                first = false;
            }
        os << "\n";
    }
    return os.str();
}

ExplicitMatroid ExplicitMatroid::parse(std::istream& in) {
    ExplicitMatroid m;
    std::string tag;
    if (!(in >> tag) || tag != "matroid") throw std::invalid_argument("expected 'matroid'");
    if (!(in >> m.name >> m.n)) throw std::invalid_argument("bad matroid header");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::uint32_t b = 0;
        int v;
        bool any = false;
        while (ls >> v) {
            if (v < 0 || v >= m.n) throw std::invalid_argument("element out of range");
            b |= 1u << v;
            any = true;
        }
        if (any) m.bases.push_back(b);
    }
    std::sort(m.bases.begin(), m.bases.end());
    m.bases.erase(std::unique(m.bases.begin(), m.bases.end()), m.bases.end());
    return m;
}

ExplicitMatroid ExplicitMatroid::mk4() {
    // K4 on vertices 0..3; edges 0:(01) 1:(02) 2:(03) 3:(12) 4:(13) 5:(23);
    // bases = spanning trees
    static const int ends[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    ExplicitMatroid m;
    m.n = 6;
    m.name = "MK4";
    for (std::uint32_t s = 0; s < 64; s++) {
        if (__builtin_popcount(s) != 3) continue;
        int uf[4] = {0, 1, 2, 3};
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool acyclic = true;
        for (int e = 0; e < 6; e++)
            if ((s >> e) & 1) {
                int a = find(ends[e][0]), b = find(ends[e][1]);
                if (a == b) acyclic = false;
                uf[a] = b;
            }
        if (acyclic) m.bases.push_back(s);
    }
    return m;
}

ExplicitMatroid ExplicitMatroid::uniform(int r, int n) {
    ExplicitMatroid m;
    m.n = n;
    m.name = "U" + std::to_string(r) + std::to_string(n);
    for (std::uint32_t s = 0; s < (1u << n); s++)
        if (__builtin_popcount(s) == r) m.bases.push_back(s);
    return m;
}

ExplicitMatroid ExplicitMatroid::restriction(std::uint32_t subset) const {
    std::vector<int> keep;
    for (int v = 0; v < n; v++)
        if ((subset >> v) & 1) keep.push_back(v);
    ExplicitMatroid r;
    r.n = (int)keep.size();
    r.name = name + "|S";
    // rank of restriction, then maximal independent subsets
    int best = 0;
    std::vector<std::uint32_t> ind;
    for (std::uint32_t s = 0; s < (1u << r.n); s++) {
        std::uint32_t full = 0;
        for (int i = 0; i < r.n; i++)
            if ((s >> i) & 1) full |= 1u << keep[i];
        if (independent(full)) {
            int p = __builtin_popcount(s);
            if (p > best) best = p;
            ind.push_back(s);
        }
    }
    for (std::uint32_t s : ind)
        if (__builtin_popcount(s) == best) r.bases.push_back(s);
    std::sort(r.bases.begin(), r.bases.end());
    return r;
}

// ---- instance matroids ----

bool InstanceMatroid::is_basis(std::uint32_t q) const {
    if (__builtin_popcount(q) != target_size) return false;
    for (auto [trace, rhs] : constraints)
        if (__builtin_popcount(q & trace) < rhs) return false;
    return true;
}

ExplicitMatroid InstanceMatroid::explicit_matroid(const std::string& name) const {
    if (ground.size() > 20) throw std::invalid_argument("ground too large for enumeration");
    ExplicitMatroid m;
    m.n = (int)ground.size();
    m.name = name;
    for (std::uint32_t s = 0; s < (1u << m.n); s++)
        if (__builtin_popcount(s) == target_size && is_basis(s)) m.bases.push_back(s);
    return m;
}

InstanceMatroid build_instance_matroid(const WeightedDigraph& d, int t, int which,
                                       std::size_t cap) {
    auto cls = classify_bipartite(d, t);
    if (!cls.is_weighted_tau_bipartite || !cls.is_sink_regular)
        throw std::invalid_argument("instance matroids need a sink-regular instance");
    InstanceMatroid m;
    m.ground = cls.active;
    auto disc = discrepancy_vector(d);
    long long discV = 0;
    for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
    m.target_size = discV;
    std::vector<int> gidx(d.num_vertices(), -1);
    for (size_t i = 0; i < m.ground.size(); i++) gidx[m.ground[i]] = (int)i;

    WeightedDigraph base = d;
    if (which == 0) {
        // dicut shores of D[A1]: drop weight-0 arcs (vertex set unchanged)
        WeightedDigraph d1(d.num_vertices(), d.name());
        for (const Arc& a : d.arcs())
            if (a.weight >= 1) d1.add_arc(a.tail, a.head, a.weight);
        base = d1;
    }
    auto shores = enumerate_dicut_shores(base, cap);
    std::map<std::uint32_t, long long> best;
    for (std::uint64_t U : shores) {
        long long dU = 0;
        std::uint32_t trace = 0;
        for (int v = 0; v < d.num_vertices(); v++)
            if ((U >> v) & 1) {
                dU += disc[v];
                if (gidx[v] >= 0) trace |= 1u << gidx[v];
            }
        long long rhs = which == 1 ? dU + 1 : dU;
        if (rhs <= 0) continue;
        auto it = best.find(trace);
        if (it == best.end() || it->second < rhs) best[trace] = rhs;
    }
    for (auto [trace, rhs] : best) m.constraints.push_back({trace, rhs});
    return m;
}

static std::vector<long long> q_minus_k_disc(const WeightedDigraph& d,
                                             const std::vector<int>& q_vertices, long long k) {
    auto disc = discrepancy_vector(d);
    std::vector<long long> h(d.num_vertices());
    std::vector<char> inq(d.num_vertices(), 0);
    for (int v : q_vertices) inq[v] = 1;
    for (int v = 0; v < d.num_vertices(); v++) h[v] = (inq[v] ? 1 : 0) - k * disc[v];
    return h;
}

bool m1_is_basis_flow(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices) {
    auto disc = discrepancy_vector(d);
    long long discV = 0;
    for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
    if ((long long)q_vertices.size() != discV) return false;
    auto r = shore_min_modular(d, q_minus_k_disc(d, q_vertices, 1));
    (void)t;
    return !r || r->value >= 1;
}

bool m0_is_basis_flow(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices) {
    auto disc = discrepancy_vector(d);
    long long discV = 0;
    for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
    if ((long long)q_vertices.size() != discV) return false;
    WeightedDigraph d1(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs())
        if (a.weight >= 1) d1.add_arc(a.tail, a.head, a.weight);
    auto r = shore_min_modular(d1, q_minus_k_disc(d, q_vertices, 1));
    (void)t;
    return !r || r->value >= 0;
}

bool m0_is_basis_bimatch(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices) {
    auto disc = discrepancy_vector(d);
    long long discV = 0;
    for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
    if ((long long)q_vertices.size() != discV) return false;
    WeightedDigraph d1(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs())
        if (a.weight >= 1) d1.add_arc(a.tail, a.head, a.weight);
    std::vector<long long> b(d.num_vertices(), 1);
    for (int v : q_vertices) b[v] = 2;
    auto r = perfect_b_matching(d1, b);
    (void)t;
    return r.exists;
}

// ---- basis partition: matroid union augmenting with exhaustive fallback ----

static bool augment(const ExplicitMatroid& m, std::vector<std::uint32_t>& parts, int x) {
    int k = (int)parts.size();
    std::vector<int> parent(m.n, -2), held_by(m.n, -1);
    for (int j = 0; j < k; j++)
        for (int v = 0; v < m.n; v++)
            if ((parts[j] >> v) & 1) held_by[v] = j;
    std::queue<int> q;
    q.push(x);
    parent[x] = -1;
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (int j = 0; j < k; j++) {
            if (held_by[e] == j) continue;
            if (m.independent(parts[j] | (1u << e))) {
                // apply the displacement chain ending at part j
                int cur = e, tgt = j;
                while (cur != -1) {
                    int old = held_by[cur];
                    parts[tgt] |= 1u << cur;
                    if (old >= 0) parts[old] &= ~(1u << cur);
                    cur = parent[cur];
                    tgt = old;
                }
                return true;
            }
        }
        for (int j = 0; j < k; j++) {
            if (held_by[e] == j) continue;
            for (int y = 0; y < m.n; y++) {
                if (held_by[y] != j || parent[y] != -2) continue;
                if (m.independent((parts[j] & ~(1u << y)) | (1u << e))) {
                    parent[y] = e;
                    q.push(y);
                }
            }
        }
    }
    return false;
}

static bool exhaustive_partition(const ExplicitMatroid& m, int k, int elem,
                                 std::vector<std::uint32_t>& parts) {
    if (elem == m.n) {
        for (auto p : parts)
            if (!m.is_basis(p)) return false;
        return true;
    }
    int opened = 0;
    for (int j = 0; j < k; j++)
        if (parts[j]) opened = j + 1;
    for (int j = 0; j < std::min(k, opened + 1); j++) {
        std::uint32_t with = parts[j] | (1u << elem);
        if (!m.independent(with)) continue;
        parts[j] = with;
        if (exhaustive_partition(m, k, elem + 1, parts)) return true;
        parts[j] &= ~(1u << elem);
    }
    return false;
}

std::optional<std::vector<std::uint32_t>> matroid_basis_partition(const ExplicitMatroid& m,
                                                                  int k) {
    if (m.bases.empty()) return std::nullopt;
    if (m.n != k * m.rank()) return std::nullopt;
    // primary: augmenting insertion
    {
        std::vector<std::uint32_t> parts(k, 0);
        bool ok = true;
        for (int x = 0; x < m.n && ok; x++) ok = augment(m, parts, x);
        if (ok) {
            bool all = true;
            std::uint32_t uni = 0;
            for (auto p : parts) {
                if (!m.is_basis(p)) all = false;
                uni |= p;
            }
            if (all && uni == (m.n == 32 ? ~0u : ((1u << m.n) - 1))) return parts;
        }
    }
    if (m.n <= 15) {
        std::vector<std::uint32_t> parts(k, 0);
        if (exhaustive_partition(m, k, 0, parts)) return parts;
        return std::nullopt;
    }
    return std::nullopt;
}

bool is_strongly_base_orderable(const ExplicitMatroid& m) {
    if (m.n > 12) throw std::invalid_argument("SBO brute force guarded to ground <= 12");
    for (std::uint32_t b1 : m.bases)
        for (std::uint32_t b2 : m.bases) {
            if (b1 >= b2) continue;
            std::vector<int> d1, d2;
            for (int v = 0; v < m.n; v++) {
                if ((b1 >> v) & 1 && !((b2 >> v) & 1)) d1.push_back(v);
                if ((b2 >> v) & 1 && !((b1 >> v) & 1)) d2.push_back(v);
            }
            std::vector<int> perm(d2.begin(), d2.end());
            std::sort(perm.begin(), perm.end());
            bool pair_ok = false;
            do {
                bool ok = true;
                for (std::uint32_t x = 0; x < (1u << d1.size()) && ok; x++) {
                    std::uint32_t sw = 0;
                    for (size_t i = 0; i < d1.size(); i++)
                        if ((x >> i) & 1) sw |= (1u << d1[i]) | (1u << perm[i]);
                    if (!m.is_basis(b1 ^ sw) || !m.is_basis(b2 ^ sw)) ok = false;
                }
                if (ok) pair_ok = true;
            } while (!pair_ok && std::next_permutation(perm.begin(), perm.end()));
            if (!pair_ok) return false;
        }
    return true;
}

bool matroids_isomorphic(const ExplicitMatroid& a, const ExplicitMatroid& b) {
    if (a.n != b.n || a.bases.size() != b.bases.size() || a.rank() != b.rank()) return false;
    // per-element basis-membership counts must match as multisets
    auto profile = [](const ExplicitMatroid& m) {
        std::vector<int> c(m.n, 0);
        for (std::uint32_t x : m.bases)
            for (int v = 0; v < m.n; v++)
                if ((x >> v) & 1) c[v]++;
        return c;
    };
    std::vector<int> pa = profile(a), pb = profile(b);
    std::vector<int> sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; i++) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < a.n && ok; i++)
            if (pa[i] != pb[perm[i]]) ok = false;
        if (!ok) continue;
        for (std::uint32_t x : a.bases) {
            std::uint32_t y = 0;
            for (int v = 0; v < a.n; v++)
                if ((x >> v) & 1) y |= 1u << perm[v];
            if (!b.is_basis(y)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_mk4_restriction(const ExplicitMatroid& m, std::uint32_t subset) {
    if (__builtin_popcount(subset) != 6) return false;
    return matroids_isomorphic(m.restriction(subset), ExplicitMatroid::mk4());
}

std::vector<int> symmetric_exchange_partners(const ExplicitMatroid& m, std::uint32_t b1,
                                             std::uint32_t b2, int u) {
    std::vector<int> out;
    if (!((b1 >> u) & 1) || ((b2 >> u) & 1)) return out;
    for (int v = 0; v < m.n; v++) {
        if (!((b2 >> v) & 1) || ((b1 >> v) & 1)) continue;
        std::uint32_t sw = (1u << u) | (1u << v);
        if (m.is_basis(b1 ^ sw) && m.is_basis(b2 ^ sw)) out.push_back(v);
    }
    return out;
}

int symmetric_exchange(const ExplicitMatroid& m, std::uint32_t b1, std::uint32_t b2, int u) {
    if (!m.is_basis(b1) || !m.is_basis(b2)) throw std::invalid_argument("not bases");
    if (!((b1 >> u) & 1) || ((b2 >> u) & 1))
        throw std::invalid_argument("u must lie in B1 - B2");
    auto p = symmetric_exchange_partners(m, b1, b2, u);
    if (p.empty()) throw std::runtime_error("no symmetric exchange partner (oracle bug)");
    return p[0];
}

Mk4FreePair find_mk4_free_pair(const ExplicitMatroid& m,
                               const std::vector<std::uint32_t>& seed_parts) {
    if (m.n != 9 || m.rank() != 3)
        throw std::invalid_argument("nine-element rank-3 ground required");
    for (std::uint32_t p : seed_parts)
        if (!m.is_basis(p)) throw std::invalid_argument("seed parts must be bases");
    // enumerate all partitions into three 3-sets, bases only
    std::vector<std::uint32_t> triples;
    for (std::uint32_t s = 0; s < (1u << 9); s++)
        if (__builtin_popcount(s) == 3 && m.is_basis(s)) triples.push_back(s);
    for (std::uint32_t q1 : triples) {
        if (!(q1 & 1u)) continue;  // canonical: part containing element 0 first
        for (std::uint32_t q2 : triples) {
            if (q1 & q2) continue;
            std::uint32_t q3 = ((1u << 9) - 1) ^ q1 ^ q2;
            if (!m.is_basis(q3)) continue;
            std::vector<std::uint32_t> parts = {q1, q2, q3};
            for (int i = 0; i < 3; i++)
                for (int j = i + 1; j < 3; j++) {
                    std::uint32_t uni = parts[i] | parts[j];
                    if (is_mk4_restriction(m, uni)) continue;
                    ExplicitMatroid r = m.restriction(uni);
                    if (!is_strongly_base_orderable(r)) continue;
                    Mk4FreePair out;
                    out.parts = parts;
                    out.i = i;
                    out.j = j;
                    return out;
                }
        }
    }
    throw std::runtime_error("no M(K4)-free pair partition found (oracle bug)");
}

static bool dm_backtrack(const ExplicitMatroid& m0, const ExplicitMatroid& m1, int k, int elem,
                         std::vector<std::uint32_t>& parts) {
    if (elem == m0.n) {
        for (auto p : parts)
            if (!m0.is_basis(p) || !m1.is_basis(p)) return false;
        return true;
    }
    int opened = 0;
    for (int j = 0; j < k; j++)
        if (parts[j]) opened = j + 1;
    for (int j = 0; j < std::min(k, opened + 1); j++) {
        std::uint32_t with = parts[j] | (1u << elem);
        if (!m0.independent(with) || !m1.independent(with)) continue;
        parts[j] = with;
        if (dm_backtrack(m0, m1, k, elem + 1, parts)) return true;
        parts[j] &= ~(1u << elem);
    }
    return false;
}

std::optional<std::vector<std::uint32_t>> common_base_partition_sbo(const ExplicitMatroid& m0,
                                                                    const ExplicitMatroid& m1,
                                                                    int k) {
    if (m0.n != m1.n) throw std::invalid_argument("ground sets differ");
    if (m0.n == 0) return std::vector<std::uint32_t>(k, 0);
    std::vector<std::uint32_t> parts(k, 0);
    if (dm_backtrack(m0, m1, k, 0, parts)) return parts;
    return std::nullopt;
}

bool is_admissible(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices) {
    return m0_is_basis_flow(d, t, q_vertices) && m1_is_basis_flow(d, t, q_vertices);
}

bool is_k_admissible(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices, int k) {
    if (k < 1) throw std::invalid_argument("k >= 1");
    if (k == 1) return is_admissible(d, t, q_vertices);
    auto disc = discrepancy_vector(d);
    long long discV = 0;
    for (int v = 0; v < d.num_vertices(); v++) discV += disc[v];
    if ((long long)q_vertices.size() != k * discV) return false;
    WeightedDigraph d1(d.num_vertices(), d.name());
    for (const Arc& a : d.arcs())
        if (a.weight >= 1) d1.add_arc(a.tail, a.head, a.weight);
    auto r0 = shore_min_modular(d1, q_minus_k_disc(d, q_vertices, k));
    if (r0 && r0->value < 0) return false;
    auto r1 = shore_min_modular(d, q_minus_k_disc(d, q_vertices, k));
    if (r1 && r1->value < k) return false;
    return true;
}

}  // namespace dipack
