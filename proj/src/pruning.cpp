#include "dh/pruning.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "dh/builders.hpp"
#include "dh/extremal.hpp"

namespace dh {

namespace {

// Residual graph with incremental XOR fingerprints of open
// neighborhoods (Zobrist keys). Fingerprint equality is always
// re-verified against actual adjacency before a removal is recorded.
struct Residual {
    std::vector<std::unordered_set<int>> adj;
    std::vector<bool> alive;
    std::vector<std::uint64_t> key;
    std::vector<std::uint64_t> open_hash;

    explicit Residual(const Graph& g) {
        int n = g.n;
        adj.resize(n);
        alive.assign(n, true);
        key.resize(n);
        open_hash.assign(n, 0);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        for (int v = 0; v < n; ++v) key[v] = rng();
        for (int v = 0; v < n; ++v) {
            adj[v].reserve(g.adj[v].size() * 2);
            for (int w : g.adj[v]) {
                adj[v].insert(w);
                open_hash[v] ^= key[w];
            }
        }
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const { return adj[u].count(v) > 0; }
    std::uint64_t closed_hash(int v) const { return open_hash[v] ^ key[v]; }

    void remove(int x) {
        alive[x] = false;
        for (int nb : adj[x]) {
            adj[nb].erase(x);
            open_hash[nb] ^= key[x];
        }
        adj[x].clear();
        open_hash[x] = 0;
    }

    bool false_twins(int x, int y) const {
        if (x == y || adjacent(x, y)) return false;
        if (degree(x) != degree(y)) return false;
        for (int w : adj[x])
            if (!adjacent(y, w)) return false;
        return true;
    }

    bool true_twins(int x, int y) const {
        if (x == y || !adjacent(x, y)) return false;
        if (degree(x) != degree(y)) return false;
        for (int w : adj[x])
            if (w != y && !adjacent(y, w)) return false;
        return true;
    }

    bool twins(int x, int y, StepKind kind) const {
        return kind == StepKind::true_twin ? true_twins(x, y) : false_twins(x, y);
    }
};

struct Builder {
    const Graph& g;
    Residual res;
    std::vector<int> layer;
    std::vector<std::vector<int>> layers;  // vertices per layer, ascending
    std::vector<PruningStep> steps;

    Builder(const Graph& g_, int root) : g(g_), res(g_) {
        auto dist = bfs(g, root).dist;
        const int inf = infinite_distance(g);
        for (int d : dist)
            if (d >= inf) throw DisconnectedGraph();
        layer = std::move(dist);
        int depth = 0;
        for (int v = 0; v < g.n; ++v) depth = std::max(depth, layer[v]);
        layers.resize(depth + 1);
        for (int v = 0; v < g.n; ++v) layers[layer[v]].push_back(v);
    }

    std::vector<int> alive_in_layer(int k) const {
        std::vector<int> out;
        for (int v : layers[k])
            if (res.alive[v]) out.push_back(v);
        return out;
    }

    void record(int x, StepKind kind, int partner, int k, char phase) {
        res.remove(x);
        steps.push_back({x, kind, partner, k, phase,
                         static_cast<int>(steps.size()) + 1});
    }

    // Partitions `bucket` into verified twin classes against a chosen
    // survivor (max id); schedules everyone else in the class.
    void schedule_bucket(const std::vector<int>& bucket, StepKind kind,
                         std::vector<std::pair<int, int>>& out) const {
        std::vector<int> rest = bucket;
        while (rest.size() >= 2) {
            int survivor = *std::max_element(rest.begin(), rest.end());
            std::vector<int> next;
            bool matched = false;
            for (int v : rest) {
                if (v == survivor) continue;
                if (res.twins(v, survivor, kind)) {
                    out.emplace_back(v, survivor);
                    matched = true;
                } else {
                    next.push_back(v);
                }
            }
            if (!matched) break;  // fingerprint collision; leftovers retry later
            rest = std::move(next);
        }
    }

    bool run_twin_removals(std::vector<std::pair<int, int>>& scheduled,
                           std::unordered_map<int, StepKind>& kind_of, int k,
                           char phase) {
        std::sort(scheduled.begin(), scheduled.end());
        bool changed = false;
        for (auto [x, partner] : scheduled) {
            if (!res.alive[x] || !res.alive[partner]) continue;
            StepKind kind = kind_of[x];
            if (!res.twins(x, partner, kind)) continue;
            record(x, kind, partner, layer[x], phase);
            changed = true;
        }
        return changed;
    }

    // (a) twins inside layer k, same component of the induced layer.
    bool phase_a(int k) {
        auto lk = alive_in_layer(k);
        if (lk.size() < 2) return false;
        // Components of the residual subgraph induced by layer k.
        std::unordered_map<int, int> comp;
        int ncomp = 0;
        for (int s : lk) {
            if (comp.count(s)) continue;
            comp[s] = ncomp;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : res.adj[v])
                    if (layer[w] == k && !comp.count(w)) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
            }
            ++ncomp;
        }
        std::map<std::pair<int, std::uint64_t>, std::vector<int>> open_groups;
        std::map<std::pair<int, std::uint64_t>, std::vector<int>> closed_groups;
        for (int v : lk) {
            open_groups[{comp[v], res.open_hash[v]}].push_back(v);
            closed_groups[{comp[v], res.closed_hash(v)}].push_back(v);
        }
        std::vector<std::pair<int, int>> scheduled;
        std::unordered_map<int, StepKind> kind_of;
        for (auto& [key_, bucket] : open_groups) {
            size_t before = scheduled.size();
            schedule_bucket(bucket, StepKind::false_twin, scheduled);
            for (size_t i = before; i < scheduled.size(); ++i)
                kind_of[scheduled[i].first] = StepKind::false_twin;
        }
        for (auto& [key_, bucket] : closed_groups) {
            size_t before = scheduled.size();
            schedule_bucket(bucket, StepKind::true_twin, scheduled);
            for (size_t i = before; i < scheduled.size(); ++i)
                kind_of[scheduled[i].first] = StepKind::true_twin;
        }
        return run_twin_removals(scheduled, kind_of, k, 'a');
    }

    // (b)/(d) pendants from layer k into layer k-1.
    bool phase_pendant(int k, char phase) {
        std::vector<std::pair<int, int>> scheduled;
        for (int x : alive_in_layer(k)) {
            if (res.degree(x) != 1) continue;
            int y = *res.adj[x].begin();
            if (layer[y] == k - 1) scheduled.emplace_back(x, y);
        }
        bool changed = false;
        for (auto [x, y] : scheduled) {
            if (!res.alive[x] || res.degree(x) != 1) continue;
            if (*res.adj[x].begin() != y) continue;
            record(x, StepKind::pendant, y, k, phase);
            changed = true;
        }
        return changed;
    }

    // (c) twins inside layer k-1 sharing N(z) for some z in layer k.
    bool phase_c(int k) {
        std::vector<std::pair<int, int>> scheduled;
        std::unordered_map<int, StepKind> kind_of;
        for (int z : alive_in_layer(k)) {
            std::vector<int> down;
            for (int w : res.adj[z])
                if (layer[w] == k - 1) down.push_back(w);
            if (down.size() < 2) continue;
            std::map<std::uint64_t, std::vector<int>> open_groups, closed_groups;
            for (int v : down) {
                open_groups[res.open_hash[v]].push_back(v);
                closed_groups[res.closed_hash(v)].push_back(v);
            }
            for (auto& [key_, bucket] : open_groups) {
                size_t before = scheduled.size();
                schedule_bucket(bucket, StepKind::false_twin, scheduled);
                for (size_t i = before; i < scheduled.size(); ++i)
                    kind_of[scheduled[i].first] = StepKind::false_twin;
            }
            for (auto& [key_, bucket] : closed_groups) {
                size_t before = scheduled.size();
                schedule_bucket(bucket, StepKind::true_twin, scheduled);
                for (size_t i = before; i < scheduled.size(); ++i)
                    kind_of[scheduled[i].first] = StepKind::true_twin;
            }
        }
        return run_twin_removals(scheduled, kind_of, k, 'c');
    }

    bool layer_empty(int k) const {
        for (int v : layers[k])
            if (res.alive[v]) return false;
        return true;
    }

    // Returns the 1-based sigma index at which iteration 1 started.
    int run() {
        int z = 1;
        for (int k = static_cast<int>(layers.size()) - 1; k >= 1; --k) {
            if (k == 1) z = static_cast<int>(steps.size()) + 1;
            while (!layer_empty(k)) {
                bool progress = phase_a(k);
                if (layer_empty(k)) break;
                progress |= phase_pendant(k, 'b');
                if (layer_empty(k)) break;
                progress |= phase_c(k);
                progress |= phase_pendant(k, 'd');
                if (!progress && !layer_empty(k)) throw NotDistanceHereditary();
            }
        }
        return z;
    }
};

}  // namespace

PruningSequence build_pruning_sequence(const Graph& g, int root) {
    if (g.n == 0) throw BadParameter("empty graph");
    if (root < 0 || root >= g.n) throw OutOfRange("root out of range");
    Builder b(g, root);
    int z = b.run();
    PruningSequence seq;
    seq.steps = std::move(b.steps);
    seq.root = root;
    seq.layer = std::move(b.layer);
    seq.marker_z = z;
    // Maximal trailing run of layer-2 pendant removals before iteration 1.
    int y = z;
    while (y > 1) {
        const auto& s = seq.steps[y - 2];
        if (s.kind == StepKind::pendant && s.layer == 2)
            --y;
        else
            break;
    }
    seq.marker_y = y;
    return seq;
}

bool is_distance_hereditary(const Graph& g) {
    if (g.n == 0) throw BadParameter("empty graph");
    if (!is_connected(g)) throw DisconnectedGraph();
    try {
        build_pruning_sequence(g, 0);
        return true;
    } catch (const NotDistanceHereditary&) {
        return false;
    }
}

int find_central_vertex(const Graph& g) {
    if (g.n == 0) throw BadParameter("empty graph");
    if (g.n <= 2) return 0;
    if (!is_connected(g)) throw DisconnectedGraph();
    auto pair = mutually_distant_pair(g, 0);
    auto dx = bfs(g, pair.x).dist;
    auto dy = bfs(g, pair.y).dist;

    // Exact eccentricities are free where the two distances differ by 2
    // or more; everything else gets a BFS, cheapest lower bound first.
    int best_e = std::numeric_limits<int>::max();
    int best_v = -1;
    std::vector<std::pair<int, int>> candidates;  // (lower bound, vertex)
    for (int u = 0; u < g.n; ++u) {
        int lo = std::max(dx[u], dy[u]);
        if (std::abs(dx[u] - dy[u]) >= 2) {
            if (lo < best_e) {
                best_e = lo;
                best_v = u;
            }
        } else {
            candidates.emplace_back(lo, u);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto [lo, u] : candidates) {
        if (lo >= best_e) break;
        auto row = bfs(g, u).dist;
        int e = *std::max_element(row.begin(), row.end());
        if (e < best_e) {
            best_e = e;
            best_v = u;
        }
    }
    return best_v;
}

std::vector<ConstructionStep> to_construction(const PruningSequence& seq) {
    std::vector<ConstructionStep> out;
    out.push_back({seq.root, StepKind::pendant, -1});
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it)
        out.push_back({it->vertex, it->kind, it->partner});
    return out;
}

}  // namespace dh
