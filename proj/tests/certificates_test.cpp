#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dh/builders.hpp"
#include "dh/certificates.hpp"
#include "test_util.hpp"

using namespace dh;

TEST_CASE("eval_lower and eval_upper basics") {
    auto p5 = build_path(5);
    auto dv = bfs(p5, 3).dist;
    CHECK(eval_lower(p5, {3}) == dv);
    auto t = all_pairs_ecc_oracle(p5);
    auto up = eval_upper(p5, {2}, t.ecc);  // center vertex, e = 2
    for (int u = 0; u < 5; ++u) CHECK(up[u] == bfs(p5, 2).dist[u] + 2);
    CHECK_THROWS_AS(eval_lower(p5, {}), EmptyCertificate);
    CHECK_THROWS_AS(eval_upper(p5, {}, t.ecc), EmptyCertificate);
}

TEST_CASE("bounds sandwich for arbitrary sets on arbitrary graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testutil::er_connected(2 + static_cast<int>(rng() % 25), 0.3, rng);
        auto t = all_pairs_ecc_oracle(g);
        std::vector<int> s;
        for (int v = 0; v < g.n; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty()) s.push_back(0);
        auto lo = eval_lower(g, s);
        auto up = eval_upper(g, s, t.ecc);
        for (int v = 0; v < g.n; ++v) {
            CHECK(lo[v] <= t.ecc[v]);
            CHECK(t.ecc[v] <= up[v]);
        }
    }
}

TEST_CASE("fig5 radius certificate and its minimality") {
    auto g = build_clique_pendant_family(3);
    auto t = all_pairs_ecc_oracle(g);
    REQUIRE(t.rad == 3);
    auto rad_rep = verify_radius_certificate(g, t.diametral, t);
    CHECK(rad_rep.pass);
    int min_el = *std::min_element(rad_rep.values.begin(), rad_rep.values.end());
    CHECK(min_el == t.rad);

    // dropping x1 (vertex 6) makes v1 (vertex 3) look too central
    std::vector<int> weakened;
    for (int v : t.diametral)
        if (v != 6) weakened.push_back(v);
    auto weak = verify_radius_certificate(g, weakened, t);
    CHECK(!weak.pass);
    CHECK(eval_lower(g, weakened)[3] == 2);
}

TEST_CASE("DH corpus: D radius, C diameter, C1 tight upper") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_dh(1 + static_cast<int>(rng() % 120), rng()).graph;
        auto t = all_pairs_ecc_oracle(g);
        CHECK(verify_radius_certificate(g, t.diametral, t).pass);
        auto dia = verify_diameter_certificate(g, t.center, t);
        CHECK(dia.pass);
        CHECK(*std::max_element(dia.values.begin(), dia.values.end()) == t.diam);
        std::vector<int> c1;
        for (int v = 0; v < g.n; ++v)
            if (t.ecc[v] <= t.rad + 1) c1.push_back(v);
        auto tight = verify_tight_upper(g, c1, t);
        CHECK(tight.pass);
        CHECK(tight.values == t.ecc);
    }
}

TEST_CASE("path-to-furthest corollary on the corpus") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_dh(1 + static_cast<int>(rng() % 80), rng()).graph;
        auto t = all_pairs_ecc_oracle(g);
        auto rep = path_to_furthest_audit(g, t);
        CHECK(rep.holds);
        if (!rep.holds) MESSAGE(rep.detail);
    }
}

TEST_CASE("counterexample search finds failing certificates off-class") {
    auto g = find_certificate_counterexample(2024);
    auto t = all_pairs_ecc_oracle(g);
    CHECK(!verify_radius_certificate(g, t.diametral, t).pass);
    CHECK(!verify_diameter_certificate(g, t.center, t).pass);
    // same seed, same graph
    auto g2 = find_certificate_counterexample(2024);
    CHECK(g.edges() == g2.edges());
}
