#ifndef DH_CENTER_HPP
#define DH_CENTER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dh/graph.hpp"

namespace dh {

struct CenterSets {
    std::vector<int> center;  // e(v) = rad, ascending
    std::vector<int> ck;      // e(v) <= rad + k, ascending
};

// C(G) and C^k(G) by thresholding exact eccentricities.
CenterSets center_and_ck(const Graph& g, const EccTable& ecc, int k);

// P4-free test by quadruple enumeration; fine at center scale.
bool is_cograph(const Graph& h);

enum class CenterClass { cograph, diam3_special, invalid };
const char* center_class_name(CenterClass c);

struct UnimodalityViolation {
    int vertex = -1;
    int ecc = 0;
    int dist_to_center = 0;
};

/// Center structure dichotomy: the induced center H is a cograph, or H
/// is connected with diam(H) = 3 and C(H) is a connected cograph of
/// radius 2. `invalid` would falsify the dichotomy.
struct CenterReport {
    std::vector<int> center;
    std::vector<int> c1;
    CenterClass classification = CenterClass::cograph;
    // diam3-special sub-report, vertices in original ids
    std::vector<int> ch;
    int ch_radius = -1;
    bool ch_connected = false;
    bool ch_cograph = false;
    std::string invalid_reason;
    std::vector<UnimodalityViolation> unimodality_violations;
};

CenterReport classify_center(const Graph& g, const EccTable& ecc);
CenterReport classify_center(const Graph& g);  // oracle eccentricities

// Every non-central v either has a neighbor of strictly smaller
// eccentricity, or e(v) = rad+1, diam = 2rad, and d(v,C) = 2.
// Returns the vertices violating that alternative (expected none).
std::vector<UnimodalityViolation> unimodality_audit(const Graph& g,
                                                    const EccTable& ecc);

struct CenterAuditReport {
    bool holds = true;
    int witness = -1;
    std::string detail;
};

// Eccentricity vs distance-to-center:
//   d(v,C)+rad-1 <= e(v) <= d(v,C)+rad for all v;
//   e(v) = d(v,C)+rad for all v when diam < 2rad;
//   e(v) = d(v,C^1)+rad+1 for all non-central v;
//   e(v) = rad+1 implies d(v,C) <= 2;
// plus the per-position eccentricity profile of every shortest path
// from v to a closest central vertex (checked through the shortest-path
// DAG, which covers all paths without enumerating them).
CenterAuditReport center_distance_audit(const Graph& g, const EccTable& ecc);

// Diametral-slice structure keyed on 2rad - diam (0, 1, or 2);
// diametral pairs and slice edges are capped per call.
CenterAuditReport center_layer_audit(const Graph& g, const EccTable& ecc);

// When diam = 2rad-2: sampled subsets M of C(G) (|M| <= 6, pairwise
// distance 2) must have a central vertex universal to M.
CenterAuditReport helly_center_audit(const Graph& g, const EccTable& ecc,
                                     std::uint64_t seed);

}  // namespace dh

#endif
