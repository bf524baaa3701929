#ifndef DH_PRUNING_HPP
#define DH_PRUNING_HPP

#include <vector>

#include "dh/graph.hpp"

namespace dh {

struct ConstructionStep;

/// One elimination step of sigma. `index` is the 1-based position in
/// sigma; `partner` is removed later than `vertex` (or never, for the
/// root). `layer` is the BFS layer of `vertex` from the root.
struct PruningStep {
    int vertex = -1;
    StepKind kind = StepKind::pendant;
    int partner = -1;
    int layer = 0;
    char phase = 'a';
    int index = 0;
};

struct PruningSequence {
    std::vector<PruningStep> steps;  // v_1 .. v_{n-1}
    int root = 0;                    // v_n
    std::vector<int> layer;          // BFS layer of every vertex from root
    // 1-based sigma indices bounding the backward phases: steps with
    // index in [marker_y, marker_z) form the maximal trailing run of
    // layer-2 pendant removals before iteration 1 begins at marker_z.
    int marker_y = 1;
    int marker_z = 1;
};

// Layer-by-layer elimination (twins within the layer, pendants into the
// layer below, twins below sharing an upper neighborhood, pendants
// again; phases reopen cyclically until the layer empties). Throws
// NotDistanceHereditary if a layer stalls, DisconnectedGraph if root
// does not reach every vertex.
PruningSequence build_pruning_sequence(const Graph& g, int root);

bool is_distance_hereditary(const Graph& g);

// A vertex of minimum eccentricity. Exact on distance-hereditary input;
// uses mutually-distant-pair bounds to prune the BFS candidate list.
int find_central_vertex(const Graph& g);

// Reversal of sigma as a forward construction (root first).
std::vector<ConstructionStep> to_construction(const PruningSequence& seq);

}  // namespace dh

#endif
