#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dh/builders.hpp"
#include "dh/pruning.hpp"
#include "test_util.hpp"

using namespace dh;

namespace {

// Replays the sequence forward against a residual copy of g, asserting
// the per-step invariants (pendant degree 1 / verified twins).
void check_steps(const Graph& g, const PruningSequence& seq) {
    std::vector<std::set<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v)
        adj[v] = {g.adj[v].begin(), g.adj[v].end()};
    std::vector<bool> alive(g.n, true);
    std::vector<bool> seen(g.n, false);
    int expect_index = 1;
    for (const auto& s : seq.steps) {
        REQUIRE(s.index == expect_index++);
        REQUIRE(alive[s.vertex]);
        REQUIRE(alive[s.partner]);
        REQUIRE(!seen[s.vertex]);
        seen[s.vertex] = true;
        CHECK(seq.layer[s.vertex] == s.layer);
        if (s.kind == StepKind::pendant) {
            CHECK(adj[s.vertex].size() == 1);
            CHECK(*adj[s.vertex].begin() == s.partner);
        } else {
            auto nx = adj[s.vertex];
            auto ny = adj[s.partner];
            if (s.kind == StepKind::true_twin) {
                CHECK(nx.count(s.partner) == 1);
                nx.erase(s.partner);
                ny.erase(s.vertex);
            } else {
                CHECK(nx.count(s.partner) == 0);
            }
            CHECK(nx == ny);
        }
        alive[s.vertex] = false;
        for (int nb : adj[s.vertex]) adj[nb].erase(s.vertex);
        adj[s.vertex].clear();
    }
    CHECK(static_cast<int>(seq.steps.size()) == g.n - 1);
    CHECK(!seen[seq.root]);
}

}  // namespace

TEST_CASE("pruning sequence on small graphs") {
    auto p3 = build_path(3);
    auto seq = build_pruning_sequence(p3, 1);
    REQUIRE(seq.steps.size() == 2);
    CHECK(seq.steps[0].kind == StepKind::pendant);
    CHECK(seq.steps[1].kind == StepKind::pendant);
    CHECK(seq.root == 1);
    check_steps(p3, seq);

    auto k1 = build_clique(1);
    auto one = build_pruning_sequence(k1, 0);
    CHECK(one.steps.empty());
    CHECK(one.marker_y == 1);
    CHECK(one.marker_z == 1);

    CHECK_THROWS_AS(build_pruning_sequence(build_cycle(5), 0),
                    NotDistanceHereditary);
    CHECK_THROWS_AS(build_pruning_sequence(make_graph(3, {{0, 1}}), 0),
                    DisconnectedGraph);
    CHECK_THROWS_AS(build_pruning_sequence(p3, 7), OutOfRange);
}

TEST_CASE("markers satisfy 1 <= y <= z <= n and bracket layer-2 pendants") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = random_dh(1 + static_cast<int>(rng() % 120), rng()).graph;
        auto seq = build_pruning_sequence(g, find_central_vertex(g));
        CHECK(1 <= seq.marker_y);
        CHECK(seq.marker_y <= seq.marker_z);
        CHECK(seq.marker_z <= g.n);
        for (int i = seq.marker_y; i < seq.marker_z; ++i) {
            const auto& s = seq.steps[i - 1];
            CHECK(s.kind == StepKind::pendant);
            CHECK(s.layer == 2);
            CHECK(seq.layer[s.partner] == 1);
        }
        for (int i = seq.marker_z; i <= static_cast<int>(seq.steps.size()); ++i)
            CHECK(seq.layer[seq.steps[i - 1].vertex] == 1);
        check_steps(g, seq);
    }
}

TEST_CASE("recognition matches the four point oracle on random graphs") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        auto g = testutil::er_connected(n, 0.4, rng);
        bool by_pruning = is_distance_hereditary(g);
        bool by_4pt = four_point_check(g, all_pairs_distances(g)).holds;
        CHECK(by_pruning == by_4pt);
    }
}

TEST_CASE("recognition rejects the forbidden graphs") {
    CHECK(!is_distance_hereditary(build_house()));
    CHECK(!is_distance_hereditary(build_gem()));
    CHECK(!is_distance_hereditary(build_domino()));
    for (int k = 5; k <= 12; ++k) CHECK(!is_distance_hereditary(build_cycle(k)));
    CHECK(is_distance_hereditary(build_cycle(4)));
    CHECK(is_distance_hereditary(build_cycle(3)));
    CHECK(is_distance_hereditary(build_clique_pendant_family(4)));
}

TEST_CASE("find_central_vertex is exact on DH inputs") {
    CHECK(find_central_vertex(build_path(5)) == 2);
    auto f = build_clique_pendant_family(3);
    CHECK(find_central_vertex(f) < 6);  // some u_i or v_i
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_dh(1 + static_cast<int>(rng() % 150), rng()).graph;
        auto t = all_pairs_ecc_oracle(g);
        CHECK(t.ecc[find_central_vertex(g)] == t.rad);
    }
}

TEST_CASE("deterministic sequences for identical input") {
    auto g = random_dh(80, 4).graph;
    auto a = build_pruning_sequence(g, 0);
    auto b = build_pruning_sequence(g, 0);
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].vertex == b.steps[i].vertex);
        CHECK(a.steps[i].partner == b.steps[i].partner);
        CHECK(a.steps[i].kind == b.steps[i].kind);
    }
}
