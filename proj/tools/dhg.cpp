#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dh/builders.hpp"
#include "dh/center.hpp"
#include "dh/certificates.hpp"
#include "dh/ecc_exact.hpp"
#include "dh/extremal.hpp"
#include "dh/io.hpp"
#include "dh/pruning.hpp"

using nlohmann::json;

namespace {

struct InputSpec {
    std::string path;
    std::string name;
    int n = 0;
    std::uint64_t seed = 1;
    bool from_generator = false;
};

dh::Graph load_input(const InputSpec& in) {
    int sources = (!in.path.empty()) + (!in.name.empty()) + in.from_generator;
    if (sources != 1)
        throw dh::BadParameter("need exactly one of --input, --name, --n");
    if (!in.path.empty()) return dh::load_graph(in.path);
    if (!in.name.empty()) return dh::build_named(in.name);
    return dh::random_dh(in.n, in.seed).graph;
}

void add_input_flags(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("--input,-i", in.path, "edge-list file");
    cmd->add_option("--name", in.name, "named graph, e.g. fig5_family(3)");
    cmd->add_option("--n", in.n, "generate a random graph with n vertices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", in.seed, "generator seed");
    cmd->callback([&in, cmd] { in.from_generator = cmd->count("--n") > 0; });
}

json base_report(const std::string& command, const InputSpec& in) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    if (in.from_generator) {
        j["generator"] = {{"n", in.n}, {"seed", in.seed}};
    } else if (!in.name.empty()) {
        j["source"] = in.name;
    } else if (!in.path.empty()) {
        j["source"] = in.path;
    }
    return j;
}

json ecc_json(const dh::EccTable& t) {
    return json{{"ecc", t.ecc},
                {"rad", t.rad},
                {"diam", t.diam},
                {"center", t.center},
                {"diametral", t.diametral}};
}

json step_json(const dh::PruningStep& s) {
    return json{{"index", s.index},
                {"vertex", s.vertex},
                {"kind", dh::step_kind_name(s.kind)},
                {"partner", s.partner},
                {"layer", s.layer},
                {"phase", std::string(1, s.phase)}};
}

json certificate_json(const dh::CertificateReport& r) {
    json j{{"kind", dh::certificate_kind_name(r.kind)},
           {"cert_set", r.cert_set},
           {"values", r.values},
           {"pass", r.pass}};
    if (!r.pass) j["witness"] = r.witness;
    return j;
}

// Runs every library-level audit on one graph; returns the list of
// violation descriptions (empty = all invariants hold).
std::vector<std::string> audit_graph(const dh::Graph& g, std::uint64_t seed) {
    std::vector<std::string> bad;
    auto oracle = dh::all_pairs_ecc_oracle(g);
    auto fast = dh::all_eccentricities_shadow(g);
    if (fast.ecc != oracle.ecc) bad.push_back("ecc mismatch vs oracle");

    auto pair = dh::mutually_distant_pair(g, 0);
    if (pair.sweeps > 5) bad.push_back("more than 5 sweeps for a mutually distant pair");
    auto bounds = dh::ecc_bounds_from_pair(g, pair);
    for (int v = 0; v < g.n; ++v)
        if (bounds.lower[v] > oracle.ecc[v] || oracle.ecc[v] > bounds.upper[v]) {
            bad.push_back("ecc bounds miss vertex " + std::to_string(v));
            break;
        }
    for (int u = 0; u < g.n; ++u) {
        auto dual = dh::duality_audit(g, pair, u);
        if (!dual.holds) {
            bad.push_back("duality: " + dual.detail + " at vertex " +
                          std::to_string(dual.vertex));
            break;
        }
    }

    auto uni = dh::unimodality_audit(g, oracle);
    if (!uni.empty())
        bad.push_back("unimodality violated at vertex " +
                      std::to_string(uni[0].vertex));
    auto cdist = dh::center_distance_audit(g, oracle);
    if (!cdist.holds) bad.push_back("center distance: " + cdist.detail);
    auto clay = dh::center_layer_audit(g, oracle);
    if (!clay.holds) bad.push_back("center layers: " + clay.detail);
    auto helly = dh::helly_center_audit(g, oracle, seed);
    if (!helly.holds) bad.push_back("helly centers: " + helly.detail);
    auto cls = dh::classify_center(g, oracle);
    if (cls.classification == dh::CenterClass::invalid)
        bad.push_back("center classification: " + cls.invalid_reason);

    if (!dh::verify_radius_certificate(g, oracle.diametral, oracle).pass)
        bad.push_back("diametral set fails as radius certificate");
    if (!dh::verify_diameter_certificate(g, oracle.center, oracle).pass)
        bad.push_back("center fails as diameter certificate");
    std::vector<int> c1;
    for (int v = 0; v < g.n; ++v)
        if (oracle.ecc[v] <= oracle.rad + 1) c1.push_back(v);
    if (!dh::verify_tight_upper(g, c1, oracle).pass)
        bad.push_back("C1 fails as tight upper certificate");
    auto pf = dh::path_to_furthest_audit(g, oracle);
    if (!pf.holds) bad.push_back("path-to-furthest: " + pf.detail);
    return bad;
}

double median_ms(const std::vector<double>& xs) {
    auto v = xs;
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-hereditary graph toolkit"};
    app.require_subcommand(1);

    InputSpec in;
    int start_vertex = 0;
    int root_override = -1;
    bool shadow = false;
    int corpus_count = 0;
    int corpus_n = 50;
    std::string out_path;
    std::vector<int> bench_sizes{1000, 10000};

    auto* recognize = app.add_subcommand("recognize", "distance-hereditary test");
    add_input_flags(recognize, in);
    recognize->add_option("--root", root_override, "pruning root vertex");

    auto* ecc = app.add_subcommand("ecc", "all eccentricities (fast path)");
    add_input_flags(ecc, in);
    ecc->add_flag("--shadow", shadow, "re-check every value against the oracle");

    auto* ecc_oracle = app.add_subcommand("ecc-oracle", "all eccentricities (BFS oracle)");
    add_input_flags(ecc_oracle, in);

    auto* bounds = app.add_subcommand("bounds", "eccentricity bounds from a mutually distant pair");
    add_input_flags(bounds, in);
    bounds->add_option("--start", start_vertex, "sweep start vertex");

    auto* center = app.add_subcommand("center", "center classification");
    add_input_flags(center, in);

    auto* certify = app.add_subcommand("certify", "radius/diameter/tight-upper certificates");
    add_input_flags(certify, in);

    auto* audit = app.add_subcommand("audit", "full invariant sweep");
    add_input_flags(audit, in);
    audit->add_option("--count", corpus_count, "number of random instances (0 = single input)");
    audit->add_option("--max-n", corpus_n, "max vertices per corpus instance");

    auto* gen = app.add_subcommand("gen", "emit a random distance-hereditary graph");
    add_input_flags(gen, in);
    gen->add_option("--output,-o", out_path, "write edge list here instead of stdout");

    auto* bench = app.add_subcommand("bench", "ecc vs ecc-oracle timings");
    bench->add_option("--sizes", bench_sizes, "graph sizes");
    bench->add_option("--seed", in.seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (recognize->parsed()) {
            auto g = load_input(in);
            json j = base_report("recognize", in);
            j["n"] = g.n;
            j["m"] = g.m;
            bool dh_flag;
            json steps = json::array();
            try {
                int root = root_override >= 0 ? root_override : 0;
                auto seq = dh::build_pruning_sequence(g, root);
                dh_flag = true;
                for (const auto& s : seq.steps) steps.push_back(step_json(s));
                j["root"] = seq.root;
                j["marker_y"] = seq.marker_y;
                j["marker_z"] = seq.marker_z;
            } catch (const dh::NotDistanceHereditary&) {
                dh_flag = false;
            }
            j["distance_hereditary"] = dh_flag;
            j["sequence"] = steps;
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (ecc->parsed()) {
            auto g = load_input(in);
            auto t = shadow ? dh::all_eccentricities_shadow(g)
                            : dh::all_eccentricities(g);
            json j = base_report("ecc", in);
            j.update(ecc_json(t));
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (ecc_oracle->parsed()) {
            auto g = load_input(in);
            json j = base_report("ecc-oracle", in);
            j.update(ecc_json(dh::all_pairs_ecc_oracle(g)));
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (bounds->parsed()) {
            auto g = load_input(in);
            auto pair = dh::mutually_distant_pair(g, start_vertex);
            auto b = dh::ecc_bounds_from_pair(g, pair);
            json j = base_report("bounds", in);
            j["pair"] = {{"x", pair.x},
                         {"y", pair.y},
                         {"dist", pair.dist},
                         {"sweeps", pair.sweeps}};
            j["lower"] = b.lower;
            j["upper"] = b.upper;
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (center->parsed()) {
            auto g = load_input(in);
            auto rep = dh::classify_center(g);
            json j = base_report("center", in);
            j["center"] = rep.center;
            j["c1"] = rep.c1;
            j["classification"] = dh::center_class_name(rep.classification);
            if (rep.classification == dh::CenterClass::diam3_special)
                j["center_of_center"] = {{"vertices", rep.ch},
                                         {"radius", rep.ch_radius},
                                         {"connected", rep.ch_connected},
                                         {"cograph", rep.ch_cograph}};
            if (!rep.invalid_reason.empty()) j["invalid_reason"] = rep.invalid_reason;
            json viol = json::array();
            for (const auto& v : rep.unimodality_violations)
                viol.push_back({{"vertex", v.vertex},
                                {"ecc", v.ecc},
                                {"dist_to_center", v.dist_to_center}});
            j["unimodality_violations"] = viol;
            std::cout << j.dump(2) << '\n';
            return rep.classification == dh::CenterClass::invalid || !viol.empty() ? 1 : 0;
        }
        if (certify->parsed()) {
            auto g = load_input(in);
            auto t = dh::all_pairs_ecc_oracle(g);
            std::vector<int> c1;
            for (int v = 0; v < g.n; ++v)
                if (t.ecc[v] <= t.rad + 1) c1.push_back(v);
            auto r1 = dh::verify_radius_certificate(g, t.diametral, t);
            auto r2 = dh::verify_diameter_certificate(g, t.center, t);
            auto r3 = dh::verify_tight_upper(g, c1, t);
            json j = base_report("certify", in);
            j["radius"] = certificate_json(r1);
            j["diameter"] = certificate_json(r2);
            j["tight_upper"] = certificate_json(r3);
            std::cout << j.dump(2) << '\n';
            return r1.pass && r2.pass && r3.pass ? 0 : 1;
        }
        if (audit->parsed()) {
            json j = base_report("audit", in);
            json failures = json::array();
            int instances = 0;
            if (corpus_count > 0) {
                for (int i = 0; i < corpus_count; ++i) {
                    std::uint64_t s = in.seed + static_cast<std::uint64_t>(i);
                    int n = 1 + static_cast<int>(s * 2654435761u % corpus_n);
                    auto g = dh::random_dh(n, s).graph;
                    ++instances;
                    for (const auto& msg : audit_graph(g, s))
                        failures.push_back({{"seed", s}, {"n", n}, {"violation", msg}});
                }
            } else {
                auto g = load_input(in);
                ++instances;
                for (const auto& msg : audit_graph(g, in.seed))
                    failures.push_back({{"violation", msg}});
            }
            j["instances"] = instances;
            j["failures"] = failures;
            j["pass"] = failures.empty();
            std::cout << j.dump(2) << '\n';
            return failures.empty() ? 0 : 1;
        }
        if (gen->parsed()) {
            if (!in.from_generator)
                throw dh::BadParameter("gen needs --n (and optionally --seed)");
            auto g = dh::random_dh(in.n, in.seed).graph;
            std::string text = "# random_dh n=" + std::to_string(in.n) +
                               " seed=" + std::to_string(in.seed) + "\n" +
                               dh::serialize_graph(g);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path);
                if (!out) throw dh::Error("cannot write " + out_path);
                out << text;
            }
            return 0;
        }
        if (bench->parsed()) {
            json j;
            j["schema"] = 1;
            j["command"] = "bench";
            j["seed"] = in.seed;
            json rows = json::array();
            for (int n : bench_sizes) {
                auto g = dh::random_dh(n, in.seed).graph;
                std::vector<double> fast_ms, oracle_ms;
                for (int run = 0; run < 5; ++run) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto t = dh::all_eccentricities(g);
                    auto t1 = std::chrono::steady_clock::now();
                    fast_ms.push_back(
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
                    (void)t;
                    if (n <= 20000) {
                        auto o0 = std::chrono::steady_clock::now();
                        auto o = dh::all_pairs_ecc_oracle(g);
                        auto o1 = std::chrono::steady_clock::now();
                        oracle_ms.push_back(
                            std::chrono::duration<double, std::milli>(o1 - o0).count());
                        (void)o;
                    }
                }
                json row{{"n", n}, {"m", g.m}, {"ecc_ms", median_ms(fast_ms)}};
                if (!oracle_ms.empty()) row["oracle_ms"] = median_ms(oracle_ms);
                rows.push_back(row);
            }
            j["timings"] = rows;
            std::cout << j.dump(2) << '\n';
            return 0;
        }
    } catch (const dh::ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"line", e.line}}.dump() << '\n';
        return 2;
    } catch (const dh::Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }
    return 2;
}
