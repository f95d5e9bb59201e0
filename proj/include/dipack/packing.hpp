#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipack/decompose.hpp"
#include "dipack/digraph.hpp"
#include "dipack/factor.hpp"
#include "dipack/matroid.hpp"

namespace dipack {

// A verified packing: every member is a dijoin, per-arc usage <= weight.
struct PackingCertificate {
    std::vector<std::vector<int>> dijoins;
    bool equitable = false;            // set only when verified
    std::vector<std::string> provenance;
};

// Honest outcome for the cases the theory leaves open; a result, not an error.
struct OutOfTheoremRange {
    std::string reason;
    long long rho_value = -1;
    int tau_value = 0;
};

struct PackResult {
    std::optional<PackingCertificate> certificate;
    std::optional<OutOfTheoremRange> out_of_range;
    bool ok() const { return certificate.has_value(); }
};

// P1 on sink-regular instances: partition A into a dijoin and a (tau-1)-dijoin
// via an M1 basis and a perfect b-matching.
std::pair<std::vector<int>, std::vector<int>> pack_dijoin_and_rest_sink_regular(
    const WeightedDigraph& d, int t);

// P1 in general: tau=2 via a minimal dijoin; tau>=3 via unweighted
// decompose-and-lift, per-piece solve, and the union transport.
std::pair<std::vector<int>, std::vector<int>> pack_dijoin_and_rest(const WeightedDigraph& d,
                                                                   int t);

// weighted split along an admissible / (tau-1)-admissible partition of a(V)
struct WeightedTwoDijoins {
    std::vector<int> dijoin;          // J subset of A1
    std::vector<int> rest;            // A1 - J, a (tau-1)-dijoin
};
WeightedTwoDijoins weighted_two_dijoins(const WeightedDigraph& d, int t,
                                        const std::vector<int>& q_vertices,
                                        const std::vector<int>& q_prime_vertices);

// S1: M1 strongly base orderable (verified for ground <= 12, or vouched by the
// caller when rank <= 2 makes it automatic).
PackingCertificate pack_sbo(const WeightedDigraph& d, int t, bool assume_sbo = false);

// S2: split a(V) = Q + Q' with Q admissible, Q' (tau-1)-admissible, M1|Q' SBO.
PackingCertificate pack_sbo2(const WeightedDigraph& d, int t, const std::vector<int>& q_vertices,
                             const std::vector<int>& q_prime_vertices);

// P3 production path: the elementary induction on non-trivial minimum dicuts,
// with the matroid (S1) path retained for cross-validation.
enum class Rho2Route { elementary, matroid };
PackingCertificate pack_rho2(const WeightedDigraph& d, int t,
                             Rho2Route route = Rho2Route::elementary);

// P4: sink-regular (3,4)-bipartite all-ones, rho(3) <= 3.
PackingCertificate pack_tau3_rho3(const WeightedDigraph& d);

// top-level dispatcher over arbitrary weighted digraphs
PackResult pack(const WeightedDigraph& d, int t);

// equitable packing of size gcd{imbalances}; delegates to pack for g >= 2
PackingCertificate gcd_packing_certificate(const WeightedDigraph& d);

// re-verification used by the CLI and tests
bool verify_certificate(const WeightedDigraph& d, int t, const PackingCertificate& cert,
                        std::string* why = nullptr);

}  // namespace dipack
