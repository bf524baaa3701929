#include "dh/graph.hpp"

#include <deque>
#include <numeric>
#include <queue>
#include <string>

namespace dh {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw BadParameter("vertex count must be non-negative");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadParameter("edge endpoint out of range: " + std::to_string(u) +
                               " " + std::to_string(v));
        if (u == v) throw SelfLoop(u);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) throw DuplicateEdge(v, *dup);
    }
    g.m = static_cast<long long>(edge_list.size());
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto row = bfs(g, 0);
    const int inf = infinite_distance(g);
    return std::all_of(row.dist.begin(), row.dist.end(),
                       [inf](int d) { return d < inf; });
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
    Graph h;
    h.n = static_cast<int>(vertices.size());
    h.adj.resize(h.n);
    long long m = 0;
    for (int i = 0; i < h.n; ++i) {
        for (int w : g.adj[vertices[i]]) {
            if (local[w] >= 0) {
                h.adj[i].push_back(local[w]);
                ++m;
            }
        }
    }
    h.m = m / 2;
    return {std::move(h), std::move(vertices)};
}

DistanceRow bfs(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw OutOfRange("bfs source out of range");
    DistanceRow row;
    row.source = source;
    row.dist.assign(g.n, infinite_distance(g));
    row.dist[source] = 0;
    std::vector<int> queue;
    queue.reserve(g.n);
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        int dv = row.dist[v];
        for (int w : g.adj[v]) {
            if (row.dist[w] > dv + 1) {
                row.dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return row;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.n);
    for (int v = 0; v < g.n; ++v) dist.push_back(bfs(g, v).dist);
    return dist;
}

EccTable ecc_table_from(std::vector<int> ecc) {
    EccTable t;
    t.ecc = std::move(ecc);
    if (t.ecc.empty()) throw BadParameter("empty eccentricity table");
    t.rad = *std::min_element(t.ecc.begin(), t.ecc.end());
    t.diam = *std::max_element(t.ecc.begin(), t.ecc.end());
    for (int v = 0; v < static_cast<int>(t.ecc.size()); ++v) {
        if (t.ecc[v] == t.rad) t.center.push_back(v);
        if (t.ecc[v] == t.diam) t.diametral.push_back(v);
    }
    return t;
}

EccTable all_pairs_ecc_oracle(const Graph& g) {
    if (g.n == 0) throw BadParameter("empty graph");
    const int inf = infinite_distance(g);
    std::vector<int> ecc(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        auto row = bfs(g, v);
        int e = *std::max_element(row.dist.begin(), row.dist.end());
        if (e >= inf) throw DisconnectedGraph();
        ecc[v] = e;
    }
    return ecc_table_from(std::move(ecc));
}

std::vector<int> interval_slice(const Graph& g, int x, int y, int k) {
    auto dx = bfs(g, x).dist;
    auto dy = bfs(g, y).dist;
    int dxy = dx[y];
    if (k < 0 || k > dxy) throw OutOfRange("slice index outside [0, d(x,y)]");
    std::vector<int> slice;
    for (int v = 0; v < g.n; ++v)
        if (dx[v] == k && dx[v] + dy[v] == dxy) slice.push_back(v);
    return slice;
}

FourPointReport four_point_check(const Graph& g,
                                 const std::vector<std::vector<int>>& dist) {
    FourPointReport rep;
    const int n = g.n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int s1 = dist[a][b] + dist[c][d];
                    int s2 = dist[a][c] + dist[b][d];
                    int s3 = dist[a][d] + dist[b][c];
                    int lo = std::min({s1, s2, s3});
                    int hi = std::max({s1, s2, s3});
                    int mid = s1 + s2 + s3 - lo - hi;
                    bool ok = (lo == mid && hi - mid <= 2) || (mid == hi);
                    if (!ok) {
                        rep.holds = false;
                        rep.witness = {a, b, c, d};
                        return rep;
                    }
                }
    return rep;
}

LayeringReport layering_check(const Graph& g, int root) {
    LayeringReport rep;
    auto dist = bfs(g, root).dist;
    int maxd = *std::max_element(dist.begin(), dist.end());
    for (int k = 1; k <= maxd; ++k) {
        // Components of the subgraph induced by layers >= k. Any path from
        // layer k that avoids layer k-1 stays inside those layers.
        std::vector<int> comp(g.n, -1);
        int ncomp = 0;
        for (int s = 0; s < g.n; ++s) {
            if (dist[s] < k || comp[s] >= 0) continue;
            comp[s] = ncomp;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.adj[v])
                    if (dist[w] >= k && comp[w] < 0) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        // Group layer-k vertices per component; their down-neighborhoods
        // N(.) in layer k-1 must coincide.
        std::vector<int> first_of_comp(ncomp, -1);
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] != k) continue;
            int c = comp[v];
            if (first_of_comp[c] < 0) {
                first_of_comp[c] = v;
                continue;
            }
            int u = first_of_comp[c];
            std::vector<int> down_v, down_u;
            for (int w : g.adj[v])
                if (dist[w] == k - 1) down_v.push_back(w);
            for (int w : g.adj[u])
                if (dist[w] == k - 1) down_u.push_back(w);
            if (down_v != down_u) {
                rep.holds = false;
                rep.u = u;
                rep.v = v;
                return rep;
            }
        }
    }
    return rep;
}

bool slices_joined_check(const Graph& g, int x, int y) {
    auto dx = bfs(g, x).dist;
    auto dy = bfs(g, y).dist;
    int dxy = dx[y];
    std::vector<std::vector<int>> slices(dxy + 1);
    for (int v = 0; v < g.n; ++v)
        if (dx[v] + dy[v] == dxy) slices[dx[v]].push_back(v);
    for (int k = 0; k < dxy; ++k)
        for (int v : slices[k])
            for (int w : slices[k + 1])
                if (!g.has_edge(v, w)) return false;
    return true;
}

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::pendant: return "pendant";
        case StepKind::true_twin: return "true-twin";
        case StepKind::false_twin: return "false-twin";
    }
    return "?";
}

StepKind step_kind_from_name(const std::string& name) {
    if (name == "pendant") return StepKind::pendant;
    if (name == "true-twin") return StepKind::true_twin;
    if (name == "false-twin") return StepKind::false_twin;
    throw BadParameter("unknown step kind: " + name);
}

}  // namespace dh
