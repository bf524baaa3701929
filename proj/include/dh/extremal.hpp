#ifndef DH_EXTREMAL_HPP
#define DH_EXTREMAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "dh/graph.hpp"

namespace dh {

struct MutuallyDistantPair {
    int x = -1;
    int y = -1;
    int dist = 0;
    int sweeps = 0;  // BFS runs used
};

// Repeated furthest-vertex sweeps from `start` until the distance stops
// increasing (ties broken by smallest vertex id). On distance-hereditary
// input this stabilizes within 5 BFS.
MutuallyDistantPair mutually_distant_pair(const Graph& g, int start);

struct EccBounds {
    std::vector<int> lower;
    std::vector<int> upper;
};

// Per-vertex eccentricity interval from a mutually distant pair:
// lower = max{d(x,u), d(y,u)}; upper adds 0 when the two distances
// differ by >= 2, 1 when they differ by 1 or d(x,y) is odd (or u is a
// known central vertex), 2 otherwise.
EccBounds ecc_bounds_from_pair(const Graph& g, const MutuallyDistantPair& pair,
                               const std::vector<int>* known_center = nullptr);

struct DualityReport {
    bool holds = true;
    int vertex = -1;      // first violating u
    std::string detail;   // which clause failed
};

// Checks both sandwich inequalities (e(u) vs distances to the pair, and
// d(x,y) vs distances from a furthest vertex of u) plus the forced
// equalities when an upper bound is attained with +2.
DualityReport duality_audit(const Graph& g, const MutuallyDistantPair& pair,
                            int u);

}  // namespace dh

#endif
