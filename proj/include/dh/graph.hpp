#ifndef DH_GRAPH_HPP
#define DH_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dh/errors.hpp"

namespace dh {

/// Immutable simple undirected graph. Vertex ids are 0..n-1, neighbor
/// lists sorted ascending. Use make_graph() to validate input edges.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    std::vector<std::pair<int, int>> edges() const;
};

// Throws SelfLoop / DuplicateEdge / BadParameter on invalid input.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

bool is_connected(const Graph& g);

// Induced subgraph on `vertices` (need not be sorted); vertex i of the
// result corresponds to vertices[i] after the list is sorted ascending.
// Returns the subgraph and the sorted original-id list.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices);

/// BFS distances from a single source; unreachable vertices get the
/// sentinel value n (an impossible distance).
struct DistanceRow {
    int source = 0;
    std::vector<int> dist;
};

DistanceRow bfs(const Graph& g, int source);

inline int infinite_distance(const Graph& g) { return g.n; }

std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// Exact per-vertex eccentricities with the derived aggregates.
struct EccTable {
    std::vector<int> ecc;
    int rad = 0;
    int diam = 0;
    std::vector<int> center;     // e(v) = rad, ascending
    std::vector<int> diametral;  // e(v) = diam, ascending
};

EccTable ecc_table_from(std::vector<int> ecc);

// One BFS per vertex; throws DisconnectedGraph if any pair is unreachable.
EccTable all_pairs_ecc_oracle(const Graph& g);

// S_k(x,y): vertices v with d(x,v) = k and d(x,v) + d(v,y) = d(x,y).
// Throws OutOfRange unless 0 <= k <= d(x,y).
std::vector<int> interval_slice(const Graph& g, int x, int y, int k);

struct FourPointReport {
    bool holds = true;
    std::array<int, 4> witness{-1, -1, -1, -1};
};

// 4-point condition over all quadruples; oracle-scale only (O(n^4)).
FourPointReport four_point_check(const Graph& g,
                                 const std::vector<std::vector<int>>& dist);

struct LayeringReport {
    bool holds = true;
    int u = -1, v = -1;  // violating pair in some layer
};

// Down-neighborhood layering condition from a single root.
LayeringReport layering_check(const Graph& g, int root);

// True iff every v in S_k(x,y) is adjacent to all of S_{k+1}(x,y).
bool slices_joined_check(const Graph& g, int x, int y);

/// Shared vocabulary for elimination/construction steps.
enum class StepKind { pendant, true_twin, false_twin };

const char* step_kind_name(StepKind k);
StepKind step_kind_from_name(const std::string& name);

}  // namespace dh

#endif
