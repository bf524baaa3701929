#ifndef DH_ECC_EXACT_HPP
#define DH_ECC_EXACT_HPP

#include <vector>

#include "dh/graph.hpp"
#include "dh/pruning.hpp"

namespace dh {

/// Per-vertex non-negative weights for weighted eccentricities
/// e_{G,p}(v) = max_u d(v,u) + p(u).
using WeightMap = std::vector<int>;

// One BFS; the oracle for every recurrence below.
int weighted_ecc_bruteforce(const Graph& g, const WeightMap& p, int v);

/// Forward pass over sigma: p starts at zero; a pendant removal pushes
/// max{p(x)+1, p(y)} into its partner y; twin removals are oriented so
/// the removed vertex is not heavier than its survivor (roles swapped in
/// sigma when violated).
struct ForwardPass {
    std::vector<PruningStep> steps;  // with twin orientation applied
    std::vector<int> p_removed;      // weight of steps[i].vertex when pruned
    std::vector<int> p_partner;      // weight of steps[i].partner at that time
    std::vector<int> p_at_y;         // weight snapshot before step marker_y
    std::vector<int> p_final;        // weight snapshot before step marker_z
    int y = 1, z = 1;                // 1-based sigma indices
    int root = 0;
    std::vector<int> layer;
};

ForwardPass forward_weight_pass(const Graph& g, const PruningSequence& seq);

/// Weighted eccentricities finalized per backward phase; final[v] holds
/// e_{G,p1}(v), the true eccentricity when p1 is all zeros.
struct WeightedEccTable {
    std::vector<int> we;          // -1 where not yet finalized
    std::vector<int> mfar;        // max over *other* vertices of d+p (-1 none);
                                  // lets a re-added pendant exclude its own
                                  // pushed weight from its parent
    std::vector<int> best_nb_w;   // heaviest residual-neighbor weight (-1 none)
    std::vector<int> best_far_w;  // heaviest residual-non-neighbor weight
};

// Phase 1: residual graph of the root plus leftover layer-1 vertices
// (diameter <= 2); closed-form maxima over heaviest neighbor and
// heaviest non-neighbor.
WeightedEccTable backward_phase1(const Graph& g, const ForwardPass& fp);

// Phase 2: reverse steps marker_y-1 .. marker_z-2, restoring the
// trailing layer-2 pendants (and any interleaved layer-1 twins).
WeightedEccTable backward_phase2(const Graph& g, const ForwardPass& fp,
                                 const WeightedEccTable& phase1);

// Phase 3: remaining steps in reverse, same twin/pendant recurrences.
EccTable backward_phase3(const Graph& g, const ForwardPass& fp,
                         const WeightedEccTable& phase2);

// Composition: central root, pruning sequence, forward pass, phases 1-3.
EccTable all_eccentricities(const Graph& g);

// Same pipeline, but every finalized value is re-checked against
// weighted_ecc_bruteforce on the matching residual graph. Throws Error
// on any mismatch. Oracle-speed; for tests and audits.
EccTable all_eccentricities_shadow(const Graph& g);

}  // namespace dh

#endif
