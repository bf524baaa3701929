#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dh/builders.hpp"
#include "dh/center.hpp"
#include "dh/pruning.hpp"

using namespace dh;

TEST_CASE("named graphs have the expected shapes") {
    auto house = build_house();
    CHECK(house.n == 5);
    CHECK(house.m == 6);
    auto gem = build_gem();
    CHECK(gem.n == 5);
    CHECK(gem.m == 7);
    CHECK(gem.degree(4) == 4);
    auto domino = build_domino();
    CHECK(domino.n == 6);
    CHECK(domino.m == 7);
    CHECK(build_cycle(7).m == 7);
    CHECK(build_path(1).m == 0);
    CHECK(build_clique(5).m == 10);
    CHECK_THROWS_AS(build_cycle(2), BadParameter);
}

TEST_CASE("fig5 family layout") {
    int l = 3;
    auto g = build_clique_pendant_family(l);
    CHECK(g.n == 4 * l);
    // cliques
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(l, l + 1));
    // u_i ~ v_j iff i != j
    CHECK(!g.has_edge(0, l + 0));
    CHECK(g.has_edge(0, l + 1));
    // pendants
    CHECK(g.degree(2 * l) == 1);
    CHECK(g.degree(3 * l) == 1);
    // d(x1, y1) = 4
    CHECK(bfs(g, 2 * l).dist[3 * l] == 4);
}

TEST_CASE("build_named dispatch") {
    CHECK(build_named("house").n == 5);
    CHECK(build_named("cycle(5)").n == 5);
    CHECK(build_named("fig5_family(4)").n == 16);
    CHECK(build_named("fig7_cograph_embed_demo").n == 8);
    CHECK_THROWS_AS(build_named("torus(3)"), BadParameter);
    CHECK_THROWS_AS(build_named("cycle(x)"), BadParameter);
}

TEST_CASE("random_dh is reproducible, connected, and DH") {
    auto a = random_dh(60, 42);
    auto b = random_dh(60, 42);
    CHECK(a.graph.edges() == b.graph.edges());
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto r = random_dh(1 + static_cast<int>(seed * 7 % 50), seed);
        CHECK(is_connected(r.graph));
        CHECK(is_distance_hereditary(r.graph));
        CHECK(layering_check(r.graph, 0).holds);
    }
    CHECK(random_dh(1, 9).graph.n == 1);
    CHECK(random_dh(2, 9).graph.m == 1);  // false twin of K1 demoted to pendant
    CHECK_THROWS_AS(random_dh(0, 1), BadParameter);
}

TEST_CASE("replay_construction round-trips a pruning sequence") {
    auto g = random_dh(40, 5).graph;
    auto seq = build_pruning_sequence(g, find_central_vertex(g));
    auto back = replay_construction(to_construction(seq));
    CHECK(back.edges() == g.edges());
}

TEST_CASE("embed_as_center cograph branch") {
    auto k2 = build_clique(2);
    auto g = embed_as_center(k2, EmbedBranch::cograph);
    CHECK(g.n == 6);
    auto t = all_pairs_ecc_oracle(g);
    CHECK(t.rad == 2);
    CHECK(t.diam == 4);
    CHECK(t.center == std::vector<int>{0, 1});
    // x and y are not adjacent; the two pendants realize distance 4
    CHECK(!g.has_edge(2, 4));
    CHECK(bfs(g, 3).dist[5] == 4);

    auto k1 = embed_as_center(build_clique(1), EmbedBranch::cograph);
    CHECK(all_pairs_ecc_oracle(k1).center == std::vector<int>{0});

    CHECK_THROWS_AS(embed_as_center(build_path(4), EmbedBranch::cograph),
                    InvalidCenterShape);
}

TEST_CASE("embed_as_center diam3 branch") {
    // P4 has diam 3 but its center is an edge of radius 1: rejected.
    CHECK_THROWS_AS(embed_as_center(build_path(4), EmbedBranch::diam3),
                    InvalidCenterShape);
    // A known valid H from the random corpus: diam 3, center a
    // connected cograph of radius 2.
    auto h = random_dh(6, 2402).graph;
    auto ht = all_pairs_ecc_oracle(h);
    REQUIRE(ht.diam == 3);
    auto g = embed_as_center(h, EmbedBranch::diam3);
    CHECK(is_distance_hereditary(g));
    auto t = all_pairs_ecc_oracle(g);
    std::vector<int> want;
    for (int v = 0; v < h.n; ++v) want.push_back(v);
    CHECK(t.center == want);
}

TEST_CASE("embedded centers equal the original vertex set") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto h = random_dh(1 + static_cast<int>(seed % 12), seed * 31 + 1).graph;
        if (!is_cograph(h)) continue;
        auto g = embed_as_center(h, EmbedBranch::cograph);
        CHECK(is_distance_hereditary(g));
        auto t = all_pairs_ecc_oracle(g);
        std::vector<int> want;
        for (int v = 0; v < h.n; ++v) want.push_back(v);
        CHECK(t.center == want);
    }
}
