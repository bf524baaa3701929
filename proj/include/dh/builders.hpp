#ifndef DH_BUILDERS_HPP
#define DH_BUILDERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dh/graph.hpp"

namespace dh {

/// One forward construction step: new_vertex enters as a pendant or a
/// twin of an existing anchor. The very first vertex has anchor = -1.
struct ConstructionStep {
    int new_vertex = 0;
    StepKind kind = StepKind::pendant;
    int anchor = -1;
};

// Named graphs. Parameterized names use build_cycle/build_path/... below.
Graph build_house();
Graph build_gem();
Graph build_domino();
Graph build_cycle(int k);   // k >= 3
Graph build_path(int k);    // k >= 1 vertices
Graph build_clique(int k);  // k >= 1

// Two l-cliques {u_i}, {v_i}; u_i adjacent to all v_j with j != i; a
// pendant x_i on each u_i and y_i on each v_i. 4l vertices.
// Ids: u_i = i, v_i = l+i, x_i = 2l+i, y_i = 3l+i.
Graph build_clique_pendant_family(int l);  // l >= 2

// Small demo of the cograph center embedding (2K2 embedded as a center).
Graph build_cograph_embed_demo();

// Dispatch by name: house, gem, domino, cycle(k), path(k), clique(k),
// fig5_family(l), fig7_cograph_embed_demo.
Graph build_named(const std::string& name);

struct RandomDhResult {
    Graph graph;
    std::vector<ConstructionStep> steps;
};

struct KindWeights {
    double pendant = 0.4;
    double true_twin = 0.3;
    double false_twin = 0.3;
};

// Random distance-hereditary graph grown from K1 by n-1 pendant/twin
// additions on uniformly random anchors. Deterministic for a fixed
// (n, seed, weights). A false twin is never applied while the graph is
// a single vertex (it would disconnect); a pendant is used instead.
RandomDhResult random_dh(int n, std::uint64_t seed,
                         const KindWeights& weights = KindWeights{});

enum class EmbedBranch { cograph, diam3 };

// Builds a distance-hereditary supergraph G of h with C(G) = V(h).
// cograph branch: h must be P4-free; adds two non-adjacent universal
// vertices, each with a pendant. diam3 branch: h must be connected DH
// with diam 3 and C(h) a connected cograph of radius 2; adds one pendant
// per vertex of C(h). Throws InvalidCenterShape otherwise.
Graph embed_as_center(const Graph& h, EmbedBranch branch);

// Replays construction steps; useful for round-tripping pruning output.
Graph replay_construction(const std::vector<ConstructionStep>& steps);

}  // namespace dh

#endif
