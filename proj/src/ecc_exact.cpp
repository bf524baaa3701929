#include "dh/ecc_exact.hpp"

#include <string>

namespace dh {

int weighted_ecc_bruteforce(const Graph& g, const WeightMap& p, int v) {
    auto row = bfs(g, v).dist;
    const int inf = infinite_distance(g);
    int best = 0;
    for (int u = 0; u < g.n; ++u) {
        if (row[u] >= inf) throw DisconnectedGraph();
        best = std::max(best, row[u] + p[u]);
    }
    return best;
}

ForwardPass forward_weight_pass(const Graph& g, const PruningSequence& seq) {
    ForwardPass fp;
    fp.steps = seq.steps;
    fp.root = seq.root;
    fp.layer = seq.layer;
    fp.y = seq.marker_y;
    fp.z = seq.marker_z;
    int nsteps = static_cast<int>(fp.steps.size());
    fp.p_removed.assign(nsteps, 0);
    fp.p_partner.assign(nsteps, 0);

    std::vector<int> rep(g.n);
    for (int v = 0; v < g.n; ++v) rep[v] = v;
    auto resolve = [&rep](int v) {
        while (rep[v] != v) v = rep[v];
        return v;
    };

    std::vector<int> p(g.n, 0);
    for (int i = 0; i < nsteps; ++i) {
        auto& s = fp.steps[i];
        s.vertex = resolve(s.vertex);
        s.partner = resolve(s.partner);
        bool forward = i <= fp.z - 2;  // sigma index i+1 < z
        if (!forward) continue;
        if (i == fp.y - 1) fp.p_at_y = p;  // snapshot before sigma index y runs
        if (s.kind != StepKind::pendant && p[s.vertex] > p[s.partner]) {
            // Twins are interchangeable; keep the heavier one alive.
            std::swap(s.vertex, s.partner);
            // Later sigma entries still name the old survivor; they now
            // mean the vertex that kept living after the swap.
            rep[s.vertex] = s.partner;
        }
        fp.p_removed[i] = p[s.vertex];
        fp.p_partner[i] = p[s.partner];
        if (s.kind == StepKind::pendant)
            p[s.partner] = std::max(p[s.vertex] + 1, p[s.partner]);
    }
    if (fp.p_at_y.empty()) fp.p_at_y = p;  // y == z or y-1 never reached
    fp.p_final = std::move(p);
    return fp;
}

namespace {

std::vector<int> residual_vertices(const ForwardPass& fp, int from_index) {
    std::vector<int> out{fp.root};
    for (int i = from_index; i < static_cast<int>(fp.steps.size()); ++i)
        out.push_back(fp.steps[i].vertex);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WeightedEccTable backward_phase1(const Graph& g, const ForwardPass& fp) {
    WeightedEccTable t;
    t.we.assign(g.n, -1);
    t.mfar.assign(g.n, -1);
    t.best_nb_w.assign(g.n, -1);
    t.best_far_w.assign(g.n, -1);
    auto members = residual_vertices(fp, fp.z - 1);
    const auto& p = fp.p_final;
    std::vector<char> in(g.n, 0);
    for (int v : members) in[v] = 1;
    // Vertex list by decreasing weight (ties by id) for the heaviest
    // non-neighbor scan; scan length is bounded by degree + 2.
    std::vector<int> vstar = members;
    std::sort(vstar.begin(), vstar.end(), [&p](int a, int b) {
        return p[a] != p[b] ? p[a] > p[b] : a < b;
    });
    for (int v : members) {
        int best_nb = -1;
        for (int w : g.adj[v])
            if (in[w]) best_nb = std::max(best_nb, p[w]);
        int best_far = -1;
        for (int u : vstar) {
            if (u == v || !in[u]) continue;
            if (g.has_edge(v, u)) continue;
            best_far = p[u];
            break;
        }
        t.best_nb_w[v] = best_nb;
        t.best_far_w[v] = best_far;
        int m = -1;
        if (best_nb >= 0) m = 1 + best_nb;
        if (best_far >= 0) m = std::max(m, 2 + best_far);
        t.mfar[v] = m;
        t.we[v] = std::max(p[v], m);
    }
    return t;
}

namespace {

// Shared reverse recurrence for one pruning step. e[v] tracks the
// weighted eccentricity in the current residual graph; mfar[v] the same
// maximum but over the *other* vertices only (so v's own weight is
// excluded). A re-added pendant must read its parent through mfar plus
// the pre-push weight, else it sees its own pushed contribution at
// distance 2.
void reverse_step(const ForwardPass& fp, int i, std::vector<int>& e,
                  std::vector<int>& mfar) {
    const auto& s = fp.steps[i];
    int j = s.partner;
    int mj = mfar[j];
    if (s.kind == StepKind::pendant) {
        mfar[s.vertex] = 1 + std::max(fp.p_partner[i], mj);
        e[s.vertex] = std::max(fp.p_removed[i], mfar[s.vertex]);
        // the parent's pushed weight already covered this child for
        // everyone else, so only its own mfar gains a term
        mfar[j] = std::max(mj, 1 + fp.p_removed[i]);
    } else {
        int d = s.kind == StepKind::true_twin ? 1 : 2;
        // twins see the rest of the graph identically
        mfar[s.vertex] = std::max(d + fp.p_partner[i], mj);
        e[s.vertex] = std::max(fp.p_removed[i], mfar[s.vertex]);
        mfar[j] = std::max(mj, d + fp.p_removed[i]);
        e[j] = std::max(e[j], mfar[j]);
    }
}

}  // namespace

WeightedEccTable backward_phase2(const Graph& g, const ForwardPass& fp,
                                 const WeightedEccTable& phase1) {
    WeightedEccTable t = phase1;
    for (int i = fp.z - 2; i >= fp.y - 1; --i)
        reverse_step(fp, i, t.we, t.mfar);
    return t;
}

EccTable backward_phase3(const Graph& g, const ForwardPass& fp,
                         const WeightedEccTable& phase2) {
    std::vector<int> e = phase2.we;
    std::vector<int> mfar = phase2.mfar;
    for (int i = fp.y - 2; i >= 0; --i) reverse_step(fp, i, e, mfar);
    return ecc_table_from(std::move(e));
}

namespace {

EccTable run_pipeline(const Graph& g, bool shadow) {
    if (g.n == 0) throw BadParameter("empty graph");
    if (g.n == 1) return ecc_table_from({0});
    int root = find_central_vertex(g);
    auto seq = build_pruning_sequence(g, root);
    auto fp = forward_weight_pass(g, seq);
    auto p1 = backward_phase1(g, fp);

    auto verify_residual = [&g](const std::vector<int>& members,
                                const std::vector<int>& weights,
                                const std::vector<int>& values,
                                const char* phase) {
        auto [sub, ids] = induced_subgraph(g, members);
        WeightMap p(sub.n);
        for (int i = 0; i < sub.n; ++i) p[i] = weights[ids[i]];
        for (int i = 0; i < sub.n; ++i) {
            int want = weighted_ecc_bruteforce(sub, p, i);
            if (values[ids[i]] != want)
                throw Error(std::string("shadow mismatch in ") + phase +
                            " at vertex " + std::to_string(ids[i]) + ": got " +
                            std::to_string(values[ids[i]]) + ", oracle " +
                            std::to_string(want));
        }
    };

    if (shadow)
        verify_residual(residual_vertices(fp, fp.z - 1), fp.p_final, p1.we,
                        "phase 1");
    auto p2 = backward_phase2(g, fp, p1);
    if (shadow)
        verify_residual(residual_vertices(fp, fp.y - 1), fp.p_at_y, p2.we,
                        "phase 2");
    if (!shadow) return backward_phase3(g, fp, p2);

    // Shadow phase 3: replay the recurrences step by step, rebuilding the
    // weight snapshot p_i from the recorded push targets.
    std::vector<int> e = p2.we;
    std::vector<int> mfar = p2.mfar;
    std::vector<int> p = fp.p_at_y;
    std::vector<int> members = residual_vertices(fp, fp.y - 1);
    for (int i = fp.y - 2; i >= 0; --i) {
        const auto& s = fp.steps[i];
        reverse_step(fp, i, e, mfar);
        if (s.kind == StepKind::pendant)
            p[s.partner] = fp.p_partner[i];  // undo the push
        members.push_back(s.vertex);
        auto [sub, ids] = induced_subgraph(g, members);
        WeightMap sp(sub.n);
        std::vector<int> local(g.n, -1);
        for (int t = 0; t < sub.n; ++t) {
            sp[t] = p[ids[t]];
            local[ids[t]] = t;
        }
        for (int check : {s.vertex, s.partner}) {
            int want = weighted_ecc_bruteforce(sub, sp, local[check]);
            if (e[check] != want)
                throw Error("shadow mismatch in phase 3 at sigma index " +
                            std::to_string(i + 1) + ", vertex " +
                            std::to_string(check) + ": got " +
                            std::to_string(e[check]) + ", oracle " +
                            std::to_string(want));
        }
    }
    return ecc_table_from(std::move(e));
}

}  // namespace

EccTable all_eccentricities(const Graph& g) { return run_pipeline(g, false); }

EccTable all_eccentricities_shadow(const Graph& g) {
    return run_pipeline(g, true);
}

}  // namespace dh
