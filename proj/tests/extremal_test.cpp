#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dh/builders.hpp"
#include "dh/extremal.hpp"
#include "test_util.hpp"

using namespace dh;

TEST_CASE("mutually distant pair on simple graphs") {
    auto p4 = build_path(4);
    for (int s = 0; s < 4; ++s) {
        auto pair = mutually_distant_pair(p4, s);
        CHECK(pair.dist == 3);
        CHECK(((pair.x == 0 && pair.y == 3) || (pair.x == 3 && pair.y == 0)));
    }
    auto c4 = build_cycle(4);
    auto pair = mutually_distant_pair(c4, 0);
    CHECK(pair.dist == 2);
    auto d = bfs(c4, pair.x).dist;
    CHECK(d[pair.y] == 2);

    auto k1 = build_clique(1);
    CHECK(mutually_distant_pair(k1, 0).dist == 0);
    CHECK_THROWS_AS(mutually_distant_pair(p4, 9), OutOfRange);
    CHECK_THROWS_AS(mutually_distant_pair(make_graph(2, {}), 0),
                    DisconnectedGraph);
}

TEST_CASE("pair is mutually distant and found within 5 sweeps on DH inputs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_dh(2 + static_cast<int>(rng() % 150), rng()).graph;
        int start = static_cast<int>(rng() % g.n);
        auto pair = mutually_distant_pair(g, start);
        CHECK(pair.sweeps <= 5);
        auto dx = bfs(g, pair.x).dist;
        auto dy = bfs(g, pair.y).dist;
        CHECK(dx[pair.y] == pair.dist);
        CHECK(*std::max_element(dx.begin(), dx.end()) == pair.dist);
        CHECK(*std::max_element(dy.begin(), dy.end()) == pair.dist);
    }
}

TEST_CASE("first sweep furthest vertex has e >= diam - 2") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_dh(2 + static_cast<int>(rng() % 120), rng()).graph;
        auto t = all_pairs_ecc_oracle(g);
        int start = static_cast<int>(rng() % g.n);
        auto d0 = bfs(g, start).dist;
        int far = 0;
        for (int v = 0; v < g.n; ++v)
            if (d0[v] > d0[far]) far = v;
        CHECK(t.ecc[far] >= t.diam - 2);
    }
}

TEST_CASE("bounds sandwich the true eccentricities") {
    std::mt19937_64 rng(9);
    bool saw_case0 = false, saw_plus2 = false;
    for (int trial = 0; trial < 80; ++trial) {
        auto g = random_dh(2 + static_cast<int>(rng() % 150), rng()).graph;
        auto t = all_pairs_ecc_oracle(g);
        auto pair = mutually_distant_pair(g, 0);
        auto b = ecc_bounds_from_pair(g, pair);
        auto dx = bfs(g, pair.x).dist;
        auto dy = bfs(g, pair.y).dist;
        for (int u = 0; u < g.n; ++u) {
            CHECK(b.lower[u] <= t.ecc[u]);
            CHECK(t.ecc[u] <= b.upper[u]);
            CHECK(b.upper[u] - b.lower[u] <= 2);
            if (std::abs(dx[u] - dy[u]) >= 2) {
                CHECK(b.lower[u] == b.upper[u]);  // case 0 is exact
                CHECK(t.ecc[u] == b.lower[u]);
                saw_case0 = true;
            }
            if (b.upper[u] - b.lower[u] == 2) saw_plus2 = true;
        }
        // known-center tightening: central vertices get at most +1
        auto bc = ecc_bounds_from_pair(g, pair, &t.center);
        for (int c : t.center) CHECK(bc.upper[c] - bc.lower[c] <= 1);
    }
    CHECK(saw_case0);
    CHECK(saw_plus2);
}

TEST_CASE("mutually distant endpoints have exact bounds") {
    auto g = build_path(4);
    auto pair = mutually_distant_pair(g, 1);
    auto b = ecc_bounds_from_pair(g, pair);
    CHECK(b.lower[pair.x] == pair.dist);
    CHECK(b.upper[pair.x] == pair.dist);
}

TEST_CASE("duality audit holds on DH corpora") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_dh(2 + static_cast<int>(rng() % 100), rng()).graph;
        auto pair = mutually_distant_pair(g, 0);
        for (int u = 0; u < g.n; ++u) {
            auto rep = duality_audit(g, pair, u);
            CHECK(rep.holds);
            if (!rep.holds)
                MESSAGE("vertex " << rep.vertex << ": " << rep.detail);
        }
    }
    // exhaustive small trees
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto t = testutil::random_tree(2 + static_cast<int>(seed % 12), rng);
        auto pair = mutually_distant_pair(t, 0);
        for (int u = 0; u < t.n; ++u) CHECK(duality_audit(t, pair, u).holds);
    }
}
