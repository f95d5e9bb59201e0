// dipack: analyze / decompose / lift / pack / verify / export-dot over dijoin
// packing instances. Exit codes: 0 ok, 1 error, 2 out-of-theorem-range,
// 3 validation failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dipack/decompose.hpp"
#include "dipack/io.hpp"
#include "dipack/oracle.hpp"
#include "dipack/packing.hpp"
#include "dipack/shores.hpp"

using namespace dipack;

static Instance piece_to_instance(const WeightedDigraph& d, const std::string& name) {
    Instance out;
    out.name = name;
    out.digraph = d;
    for (int v = 0; v < d.num_vertices(); v++) out.labels.push_back(std::to_string(v + 1));
    return out;
}

static std::string cert_text(const Instance& inst, int t, const PackingCertificate& cert) {
    std::ostringstream os;
    os << "packing " << inst.name << " tau " << t << "\n";
    for (auto& J : cert.dijoins) {
        for (size_t i = 0; i < J.size(); i++) os << (i ? " " : "") << J[i];
        os << "\n";
    }
    os << "verified members=" << cert.dijoins.size() << " equitable="
       << (cert.equitable ? "true" : "false") << "\n";
    return os.str();
}

int main(int argc, char** argv) {
    CLI::App app{"dijoin packing toolkit"};
    app.require_subcommand(1);

    std::string name, out_path = "", cert_path = "";
    int tau_opt = 2;
    bool deep = false, balanced = false, equitable = false;

    auto* an = app.add_subcommand("analyze", "tau, rho, classification, dicut count");
    an->add_option("instance", name)->required();
    an->add_option("--tau", tau_opt);

    auto* de = app.add_subcommand("decompose", "split into irreducible pieces");
    de->add_option("instance", name)->required();
    de->add_option("-o,--out", out_path);

    auto* li = app.add_subcommand("lift", "decompose-and-lift to sink-regular pieces");
    li->add_option("instance", name)->required();
    li->add_option("--tau", tau_opt)->required();
    li->add_flag("--balanced", balanced);
    li->add_option("-o,--out", out_path);

    auto* pa = app.add_subcommand("pack", "run the packing dispatcher");
    pa->add_option("instance", name)->required();
    pa->add_option("--tau", tau_opt)->required();
    pa->add_option("-o,--out", cert_path);

    auto* ve = app.add_subcommand("verify", "re-check a certificate or instance claims");
    ve->add_option("instance", name)->required();
    ve->add_option("--cert", cert_path);
    ve->add_option("--tau", tau_opt);
    ve->add_flag("--deep", deep, "run exhaustive claim checks");
    ve->add_flag("--equitable", equitable, "also require equitability");

    auto* ex = app.add_subcommand("export-dot", "write DOT");
    ex->add_option("instance", name)->required();
    ex->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) {
            Instance inst = load_instance(name);
            const WeightedDigraph& d = inst.digraph;
            auto t = tau(d);
            auto cls = classify_bipartite(d, tau_opt);
            std::cout << "instance=" << inst.name << " vertices=" << d.num_vertices()
                      << " arcs=" << d.num_arcs() << "\n";
            std::cout << "tau=" << (t ? std::to_string(*t) : "infinity");
            if (tau_opt >= 2) std::cout << " rho" << tau_opt << "=" << rho(tau_opt, d);
            std::cout << " sink_regular=" << (cls.is_sink_regular ? "true" : "false")
                      << " bipartite=" << (cls.is_weighted_tau_bipartite ? "true" : "false")
                      << " balanced=" << (cls.is_balanced ? "true" : "false") << "\n";
            try {
                std::cout << "dicut_shores=" << enumerate_dicut_shores(d, 2000000).size()
                          << "\n";
            } catch (const EnumCapExceeded&) {
                std::cout << "dicut_shores=>2000000 (cap)\n";
            }
            return 0;
        }
        if (de->parsed()) {
            Instance inst = load_instance(name);
            auto forest = decompose(inst.digraph);
            std::cout << forest.pieces.size() << " irreducible pieces\n";
            for (size_t p = 0; p < forest.pieces.size(); p++) {
                Instance pi = piece_to_instance(forest.pieces[p],
                                                inst.name + "_piece" + std::to_string(p));
                if (!out_path.empty()) {
                    std::ofstream f(out_path + "/" + pi.name + ".dg");
                    f << serialize_instance(pi);
                } else {
                    std::cout << serialize_instance(pi);
                }
            }
            return 0;
        }
        if (li->parsed()) {
            Instance inst = load_instance(name);
            auto dl = decompose_and_lift(inst.digraph, tau_opt,
                                         balanced ? LiftMode::balanced : LiftMode::sink_regular);
            std::cout << dl.lifts.size() << " lifted pieces\n";
            for (size_t p = 0; p < dl.lifts.size(); p++) {
                Instance pi = piece_to_instance(dl.lifts[p].lifted,
                                                inst.name + "_lift" + std::to_string(p));
                if (!out_path.empty()) {
                    std::ofstream f(out_path + "/" + pi.name + ".dg");
                    f << serialize_instance(pi);
                    std::ofstream g(out_path + "/" + pi.name + ".dot");
                    g << to_dot(pi, &dl.lifts[p].coords);
                } else {
                    std::cout << serialize_instance(pi);
                }
            }
            return 0;
        }
        if (pa->parsed()) {
            Instance inst = load_validated(name, false);
            PackResult r = pack(inst.digraph, tau_opt);
            if (!r.ok()) {
                std::cout << "out-of-theorem-range: " << r.out_of_range->reason << "\n";
                return 2;
            }
            std::string txt = cert_text(inst, tau_opt, *r.certificate);
            if (!cert_path.empty()) {
                std::ofstream f(cert_path);
                f << txt;
            }
            std::cout << txt;
            return 0;
        }
        if (ve->parsed()) {
            Instance inst = load_instance(name);
            if (!cert_path.empty()) {
                std::ifstream f(cert_path);
                if (!f) throw std::runtime_error("cannot open certificate " + cert_path);
                std::string line;
                std::getline(f, line);  // header
                PackingCertificate cert;
                while (std::getline(f, line)) {
                    if (line.rfind("verified", 0) == 0) break;
                    std::istringstream ls(line);
                    std::vector<int> J;
                    int x;
                    while (ls >> x) J.push_back(x);
                    if (!J.empty()) cert.dijoins.push_back(J);
                }
                cert.equitable = equitable;
                std::string why;
                if (!verify_certificate(inst.digraph, (int)cert.dijoins.size(), cert, &why)) {
                    std::cout << "certificate INVALID: " << why << "\n";
                    return 3;
                }
                std::cout << "certificate ok: " << cert.dijoins.size() << " dijoins\n";
                return 0;
            }
            auto reports = validate_instance_claims(inst, deep);
            bool all = true;
            for (auto& r : reports) {
                std::cout << (r.ok ? "ok   " : "FAIL ") << r.claim
                          << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
                all &= r.ok;
            }
            return all ? 0 : 3;
        }
        if (ex->parsed()) {
            Instance inst = load_instance(name);
            std::string txt = to_dot(inst);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << txt;
            } else {
                std::cout << txt;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
