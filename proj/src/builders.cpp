#include "dh/builders.hpp"

#include <random>
#include <set>

#include "dh/center.hpp"
#include "dh/pruning.hpp"

namespace dh {

Graph build_house() {
    // Square 0-1-2-3 with a roof vertex 4 on edge 0-1.
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
}

Graph build_gem() {
    // P4 0-1-2-3 plus a universal vertex 4.
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

Graph build_domino() {
    // Two squares sharing an edge: the 2x3 grid.
    return make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph build_cycle(int k) {
    if (k < 3) throw BadParameter("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return make_graph(k, e);
}

Graph build_path(int k) {
    if (k < 1) throw BadParameter("path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return make_graph(k, e);
}

Graph build_clique(int k) {
    if (k < 1) throw BadParameter("clique needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return make_graph(k, e);
}

Graph build_clique_pendant_family(int l) {
    if (l < 2) throw BadParameter("clique-pendant family needs l >= 2");
    std::vector<std::pair<int, int>> e;
    auto u = [l](int i) { return i; };
    auto v = [l](int i) { return l + i; };
    auto x = [l](int i) { return 2 * l + i; };
    auto y = [l](int i) { return 3 * l + i; };
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            e.emplace_back(u(i), u(j));
            e.emplace_back(v(i), v(j));
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (i != j) e.emplace_back(u(i), v(j));
    for (int i = 0; i < l; ++i) {
        e.emplace_back(u(i), x(i));
        e.emplace_back(v(i), y(i));
    }
    return make_graph(4 * l, e);
}

Graph build_cograph_embed_demo() {
    // 2K2 is P4-free; its embedding is an 8-vertex graph with the 2K2
    // vertices as the full center.
    Graph h = make_graph(4, {{0, 1}, {2, 3}});
    return embed_as_center(h, EmbedBranch::cograph);
}

Graph build_named(const std::string& name) {
    if (name == "house") return build_house();
    if (name == "gem") return build_gem();
    if (name == "domino") return build_domino();
    if (name == "fig7_cograph_embed_demo") return build_cograph_embed_demo();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string base = name.substr(0, paren);
        int k = 0;
        try {
            k = std::stoi(name.substr(paren + 1, name.size() - paren - 2));
        } catch (const std::exception&) {
            throw BadParameter("bad numeric parameter in '" + name + "'");
        }
        if (base == "cycle") return build_cycle(k);
        if (base == "path") return build_path(k);
        if (base == "clique") return build_clique(k);
        if (base == "fig5_family") return build_clique_pendant_family(k);
    }
    throw BadParameter("unknown graph name: " + name);
}

Graph replay_construction(const std::vector<ConstructionStep>& steps) {
    if (steps.empty()) throw BadParameter("empty construction");
    int n = static_cast<int>(steps.size());
    std::vector<std::set<int>> adj(n);
    std::vector<bool> present(n, false);
    bool first = true;
    for (const auto& s : steps) {
        int v = s.new_vertex;
        if (v < 0 || v >= n || present[v])
            throw BadParameter("invalid construction step vertex");
        if (first) {
            present[v] = true;
            first = false;
            continue;
        }
        int a = s.anchor;
        if (a < 0 || a >= n || !present[a])
            throw BadParameter("construction anchor missing");
        switch (s.kind) {
            case StepKind::pendant:
                adj[v].insert(a);
                adj[a].insert(v);
                break;
            case StepKind::true_twin:
                for (int w : adj[a]) {
                    adj[v].insert(w);
                    adj[w].insert(v);
                }
                adj[v].insert(a);
                adj[a].insert(v);
                break;
            case StepKind::false_twin:
                for (int w : adj[a]) {
                    adj[v].insert(w);
                    adj[w].insert(v);
                }
                break;
        }
        present[v] = true;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) edges.emplace_back(v, w);
    return make_graph(n, edges);
}

RandomDhResult random_dh(int n, std::uint64_t seed, const KindWeights& weights) {
    if (n < 1) throw BadParameter("random_dh needs n >= 1");
    double total = weights.pendant + weights.true_twin + weights.false_twin;
    if (!(total > 0)) throw BadParameter("kind weights must have positive sum");

    std::mt19937_64 rng(seed);
    // Uniform double in [0,1) from the top 53 bits of the raw output, and
    // modulo for anchors: both fully determined by the mt19937_64 stream,
    // so corpora are reproducible bit-exactly across platforms.
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

    RandomDhResult out;
    out.steps.push_back({0, StepKind::pendant, -1});
    for (int v = 1; v < n; ++v) {
        double r = unit() * total;
        StepKind kind;
        if (r < weights.pendant)
            kind = StepKind::pendant;
        else if (r < weights.pendant + weights.true_twin)
            kind = StepKind::true_twin;
        else
            kind = StepKind::false_twin;
        if (v == 1 && kind == StepKind::false_twin) kind = StepKind::pendant;
        int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        out.steps.push_back({v, kind, anchor});
    }
    out.graph = replay_construction(out.steps);
    return out;
}

Graph embed_as_center(const Graph& h, EmbedBranch branch) {
    if (h.n < 1) throw BadParameter("embed_as_center needs a nonempty graph");
    auto edges = h.edges();
    if (branch == EmbedBranch::cograph) {
        if (!is_cograph(h))
            throw InvalidCenterShape("cograph branch requires a P4-free graph");
        int x = h.n, xs = h.n + 1, y = h.n + 2, ys = h.n + 3;
        for (int v = 0; v < h.n; ++v) {
            edges.emplace_back(x, v);
            edges.emplace_back(y, v);
        }
        edges.emplace_back(x, xs);
        edges.emplace_back(y, ys);
        return make_graph(h.n + 4, edges);
    }
    // diam3 branch
    if (!is_connected(h)) throw InvalidCenterShape("diam3 branch requires a connected graph");
    if (!is_distance_hereditary(h))
        throw InvalidCenterShape("diam3 branch requires a distance-hereditary graph");
    auto table = all_pairs_ecc_oracle(h);
    if (table.diam != 3) throw InvalidCenterShape("diam3 branch requires diameter 3");
    auto [ch, ch_ids] = induced_subgraph(h, table.center);
    if (!is_connected(ch))
        throw InvalidCenterShape("center of h must be connected");
    if (!is_cograph(ch)) throw InvalidCenterShape("center of h must be a cograph");
    if (all_pairs_ecc_oracle(ch).rad != 2)
        throw InvalidCenterShape("center of h must have radius 2");
    int next = h.n;
    for (int c : ch_ids) edges.emplace_back(c, next++);
    return make_graph(next, edges);
}

}  // namespace dh
