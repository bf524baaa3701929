#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dh/builders.hpp"
#include "dh/graph.hpp"
#include "test_util.hpp"

using namespace dh;

TEST_CASE("make_graph validates input") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), SelfLoop);
    CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), DuplicateEdge);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), BadParameter);
    auto g = make_graph(3, {{0, 1}, {2, 1}});
    CHECK(g.m == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
}

TEST_CASE("bfs distances and connectivity") {
    auto p4 = build_path(4);
    auto row = bfs(p4, 0);
    CHECK(row.dist == std::vector<int>{0, 1, 2, 3});
    CHECK(is_connected(p4));
    auto two = make_graph(2, {});
    CHECK(!is_connected(two));
    CHECK(bfs(two, 0).dist[1] == infinite_distance(two));
}

TEST_CASE("oracle eccentricities on known graphs") {
    auto t = all_pairs_ecc_oracle(build_path(5));
    CHECK(t.ecc == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(t.rad == 2);
    CHECK(t.diam == 4);
    CHECK(t.center == std::vector<int>{2});
    CHECK(t.diametral == std::vector<int>{0, 4});

    auto c = all_pairs_ecc_oracle(build_cycle(6));
    CHECK(c.rad == 3);
    CHECK(c.diam == 3);

    CHECK_THROWS_AS(all_pairs_ecc_oracle(make_graph(2, {})), DisconnectedGraph);
}

TEST_CASE("adjacent eccentricities differ by at most one") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testutil::er_connected(2 + static_cast<int>(rng() % 30), 0.3, rng);
        auto t = all_pairs_ecc_oracle(g);
        for (auto [u, v] : g.edges()) CHECK(std::abs(t.ecc[u] - t.ecc[v]) <= 1);
    }
}

TEST_CASE("induced subgraph keeps original-id mapping") {
    auto g = build_cycle(5);
    auto [h, ids] = induced_subgraph(g, {4, 0, 1});
    CHECK(ids == std::vector<int>{0, 1, 4});
    CHECK(h.m == 2);
    CHECK(h.has_edge(0, 1));  // 0-1
    CHECK(h.has_edge(0, 2));  // 0-4
    CHECK(!h.has_edge(1, 2));
}

TEST_CASE("interval slices") {
    auto p5 = build_path(5);
    CHECK(interval_slice(p5, 0, 4, 2) == std::vector<int>{2});
    CHECK_THROWS_AS(interval_slice(p5, 0, 4, 5), OutOfRange);
    auto c6 = build_cycle(6);
    // two shortest paths between antipodal vertices
    CHECK(interval_slice(c6, 0, 3, 1) == std::vector<int>{1, 5});
}

TEST_CASE("four point condition splits DH from non-DH") {
    auto ok = [](const Graph& g) {
        return four_point_check(g, all_pairs_distances(g)).holds;
    };
    CHECK(ok(build_path(6)));
    CHECK(ok(build_clique_pendant_family(3)));
    CHECK(!ok(build_house()));
    CHECK(!ok(build_gem()));
    CHECK(!ok(build_domino()));
    CHECK(!ok(build_cycle(5)));
    CHECK(!ok(build_cycle(6)));
    CHECK(ok(build_cycle(4)));
    auto rep = four_point_check(build_cycle(5), all_pairs_distances(build_cycle(5)));
    CHECK(rep.witness[0] >= 0);  // witness populated on failure
}

TEST_CASE("layering check on DH and non-DH inputs") {
    auto f = build_clique_pendant_family(3);
    for (int r = 0; r < f.n; ++r) CHECK(layering_check(f, r).holds);
    bool any_fail = false;
    auto c6 = build_cycle(6);
    for (int r = 0; r < c6.n; ++r) any_fail |= !layering_check(c6, r).holds;
    CHECK(any_fail);
}

TEST_CASE("slices joined on DH graphs, C6 fails") {
    auto p = build_path(6);
    CHECK(slices_joined_check(p, 0, 5));
    auto f = build_clique_pendant_family(3);
    CHECK(slices_joined_check(f, 2 * 3, 3 * 3));  // x_1 to y_1
    CHECK(!slices_joined_check(build_cycle(6), 0, 3));
}

TEST_CASE("step kind names round-trip") {
    for (auto k : {StepKind::pendant, StepKind::true_twin, StepKind::false_twin})
        CHECK(step_kind_from_name(step_kind_name(k)) == k);
    CHECK_THROWS_AS(step_kind_from_name("mystery"), BadParameter);
}
