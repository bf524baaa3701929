#include "dh/center.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace dh {

namespace {

// Multi-source BFS distances (sentinel n for unreachable).
std::vector<int> dist_to_set(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> d(g.n, infinite_distance(g));
    std::queue<int> q;
    for (int s : sources) {
        if (d[s] == infinite_distance(g)) {
            d[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (d[w] > d[v] + 1) {
                d[w] = d[v] + 1;
                q.push(w);
            }
    }
    return d;
}

}  // namespace

CenterSets center_and_ck(const Graph& g, const EccTable& ecc, int k) {
    if (k < 0) throw BadParameter("C^k needs k >= 0");
    CenterSets out;
    for (int v = 0; v < g.n; ++v) {
        if (ecc.ecc[v] == ecc.rad) out.center.push_back(v);
        if (ecc.ecc[v] <= ecc.rad + k) out.ck.push_back(v);
    }
    return out;
}

bool is_cograph(const Graph& h) {
    int n = h.n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int quad[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (h.has_edge(quad[i], quad[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    // 3 edges on 4 vertices with degrees {1,1,2,2} is a P4.
                    int ones = 0, twos = 0;
                    for (int d2 : deg) {
                        if (d2 == 1) ++ones;
                        if (d2 == 2) ++twos;
                    }
                    if (ones == 2 && twos == 2) return false;
                }
    return true;
}

const char* center_class_name(CenterClass c) {
    switch (c) {
        case CenterClass::cograph: return "cograph";
        case CenterClass::diam3_special: return "diam3-special";
        default: return "invalid";
    }
}

CenterReport classify_center(const Graph& g, const EccTable& ecc) {
    CenterReport rep;
    auto sets = center_and_ck(g, ecc, 1);
    rep.center = sets.center;
    rep.c1 = sets.ck;
    rep.unimodality_violations = unimodality_audit(g, ecc);

    auto [h, ids] = induced_subgraph(g, rep.center);
    if (is_cograph(h)) {
        rep.classification = CenterClass::cograph;
        return rep;
    }
    if (!is_connected(h)) {
        rep.classification = CenterClass::invalid;
        rep.invalid_reason = "center has a P4 but is disconnected";
        return rep;
    }
    auto ht = all_pairs_ecc_oracle(h);
    if (ht.diam != 3) {
        rep.classification = CenterClass::invalid;
        rep.invalid_reason = "center has a P4 but diameter " +
                             std::to_string(ht.diam) + " instead of 3";
        return rep;
    }
    auto [ch, ch_ids] = induced_subgraph(h, ht.center);
    for (int v : ch_ids) rep.ch.push_back(ids[v]);
    rep.ch_connected = is_connected(ch);
    rep.ch_cograph = is_cograph(ch);
    rep.ch_radius = rep.ch_connected ? all_pairs_ecc_oracle(ch).rad : -1;
    if (rep.ch_connected && rep.ch_cograph && rep.ch_radius == 2) {
        rep.classification = CenterClass::diam3_special;
    } else {
        rep.classification = CenterClass::invalid;
        rep.invalid_reason = "center of the center fails connected-cograph-radius-2";
    }
    return rep;
}

CenterReport classify_center(const Graph& g) {
    return classify_center(g, all_pairs_ecc_oracle(g));
}

std::vector<UnimodalityViolation> unimodality_audit(const Graph& g,
                                                    const EccTable& ecc) {
    std::vector<UnimodalityViolation> out;
    auto dc = dist_to_set(g, ecc.center);
    for (int v = 0; v < g.n; ++v) {
        if (ecc.ecc[v] == ecc.rad) continue;
        bool has_smaller = false;
        for (int w : g.adj[v])
            if (ecc.ecc[w] < ecc.ecc[v]) {
                has_smaller = true;
                break;
            }
        if (has_smaller) continue;
        bool triple = ecc.ecc[v] == ecc.rad + 1 && ecc.diam == 2 * ecc.rad &&
                      dc[v] == 2;
        if (!triple) out.push_back({v, ecc.ecc[v], dc[v]});
    }
    return out;
}

CenterAuditReport center_distance_audit(const Graph& g, const EccTable& ecc) {
    CenterAuditReport rep;
    auto fail = [&rep](int v, const std::string& what) {
        if (rep.holds) {
            rep.holds = false;
            rep.witness = v;
            rep.detail = what;
        }
    };
    const int rad = ecc.rad, diam = ecc.diam;
    auto dc = dist_to_set(g, ecc.center);
    std::vector<int> c1;
    for (int v = 0; v < g.n; ++v)
        if (ecc.ecc[v] <= rad + 1) c1.push_back(v);
    auto dc1 = dist_to_set(g, c1);

    for (int v = 0; v < g.n; ++v) {
        int e = ecc.ecc[v];
        if (!(dc[v] + rad - 1 <= e && e <= dc[v] + rad))
            fail(v, "e(v) outside [d(v,C)+rad-1, d(v,C)+rad]");
        if (diam < 2 * rad && e != dc[v] + rad)
            fail(v, "diam<2rad but e(v) != d(v,C)+rad");
        if (e != rad && e != dc1[v] + rad + 1)
            fail(v, "non-central v with e(v) != d(v,C1)+rad+1");
        if (e == rad + 1 && dc[v] > 2) fail(v, "e(v)=rad+1 but d(v,C) > 2");
    }

    // Path profiles: every vertex w with d(v,w)+d(w,C) = d(v,C) sits at
    // position i = d(w,C) on some shortest path from v to a closest
    // central vertex, and every such path is covered by these vertices.
    for (int v = 0; v < g.n; ++v) {
        int l = dc[v];
        if (l == 0) continue;
        int e = ecc.ecc[v];
        bool tight = e == l + rad;  // else e = l + rad - 1 (or flagged above)
        if (!tight && l < 3) continue;  // boundary profiles not specified
        auto dv = bfs(g, v).dist;
        for (int w = 0; w < g.n; ++w) {
            if (dv[w] + dc[w] != l) continue;
            int i = dc[w];
            int want;
            if (tight)
                want = i + rad;
            else if (i == 0)
                want = rad;
            else if (i <= 2)
                want = rad + 1;
            else
                want = i - 1 + rad;
            if (ecc.ecc[w] != want) {
                fail(w, "path profile mismatch at distance " +
                            std::to_string(i) + " from center (from v=" +
                            std::to_string(v) + ")");
                return rep;
            }
        }
    }
    return rep;
}

CenterAuditReport center_layer_audit(const Graph& g, const EccTable& ecc) {
    CenterAuditReport rep;
    auto fail = [&rep](int v, const std::string& what) {
        if (rep.holds) {
            rep.holds = false;
            rep.witness = v;
            rep.detail = what;
        }
    };
    const int rad = ecc.rad, diam = ecc.diam;
    int gap = 2 * rad - diam;
    if (gap < 0 || gap > 2) return rep;  // DH graphs: diam >= 2rad-2

    std::vector<char> central(g.n, 0);
    for (int c : ecc.center) central[c] = 1;

    if (gap >= 1) {
        auto [h, ids] = induced_subgraph(g, ecc.center);
        if (!is_cograph(h)) fail(-1, "diam >= 2rad-1 but C(G) is not a cograph");
    }

    int pairs_checked = 0;
    const int pair_cap = 50;
    for (size_t xi = 0; xi < ecc.diametral.size() && pairs_checked < pair_cap;
         ++xi) {
        int x = ecc.diametral[xi];
        auto dx = bfs(g, x).dist;
        for (size_t yi = xi + 1;
             yi < ecc.diametral.size() && pairs_checked < pair_cap; ++yi) {
            int y = ecc.diametral[yi];
            if (dx[y] != diam) continue;
            ++pairs_checked;
            auto dy = bfs(g, y).dist;
            auto slice = [&](int from_x) {  // S_{from_x}(x,y)
                std::vector<int> s;
                for (int v = 0; v < g.n; ++v)
                    if (dx[v] == from_x && dx[v] + dy[v] == diam)
                        s.push_back(v);
                return s;
            };
            if (gap == 0) {
                auto s = slice(rad);
                std::vector<char> in_s(g.n, 0);
                for (int v : s) in_s[v] = 1;
                for (int c : ecc.center)
                    if (!in_s[c]) fail(c, "diam=2rad: central vertex outside S_rad(x,y)");
                auto [hs, sids] = induced_subgraph(g, s);
                if (!is_cograph(hs)) fail(-1, "diam=2rad: slice S is not a cograph");
                for (int side : {rad - 1, rad + 1})
                    for (int w : slice(side))
                        for (int v : s)
                            if (!g.has_edge(w, v))
                                fail(w, "diam=2rad: adjacent-slice vertex not universal to S");
                for (int c = 0; c < g.n; ++c) {
                    if (ecc.ecc[c] > rad + 1 || in_s[c]) continue;
                    bool near = false;
                    for (int w : g.adj[c])
                        if (in_s[w]) {
                            near = true;
                            break;
                        }
                    if (!near) fail(c, "diam=2rad: C1 vertex outside D(S,1)");
                }
            } else if (gap == 1) {
                auto a = slice(rad - 1);
                auto b = slice(rad);
                bool a_central = false, b_central = false;
                for (int v : a) a_central |= central[v] != 0;
                for (int v : b) b_central |= central[v] != 0;
                if (!a_central || !b_central)
                    fail(x, "diam=2rad-1: a diametral slice misses C(G)");
                int edges_checked = 0;
                for (int va : a)
                    for (int vb : b) {
                        if (!g.has_edge(va, vb) || edges_checked >= 100) continue;
                        ++edges_checked;
                        for (int c : ecc.center)
                            if (c != va && c != vb && !g.has_edge(c, va) &&
                                !g.has_edge(c, vb))
                                fail(c, "diam=2rad-1: central vertex outside D({a,b},1)");
                    }
            } else {  // gap == 2
                auto a = slice(rad - 2);
                auto s = slice(rad - 1);
                auto b = slice(rad);
                for (int v : a)
                    if (!central[v]) fail(v, "diam=2rad-2: slice A vertex not central");
                for (int v : b)
                    if (!central[v]) fail(v, "diam=2rad-2: slice B vertex not central");
                std::vector<int> sc;
                for (int v : s)
                    if (central[v]) sc.push_back(v);
                if (sc.empty()) {
                    fail(x, "diam=2rad-2: middle slice misses C(G)");
                    continue;
                }
                std::vector<char> in_sc(g.n, 0);
                for (int v : sc) in_sc[v] = 1;
                for (int c : ecc.center) {
                    if (in_sc[c]) continue;
                    bool near = false;
                    for (int w : g.adj[c])
                        if (in_sc[w]) {
                            near = true;
                            break;
                        }
                    if (!near) fail(c, "diam=2rad-2: central vertex outside D(S cap C, 1)");
                }
            }
        }
    }
    return rep;
}

CenterAuditReport helly_center_audit(const Graph& g, const EccTable& ecc,
                                     std::uint64_t seed) {
    CenterAuditReport rep;
    if (2 * ecc.rad - ecc.diam != 2) {
        rep.detail = "inapplicable: diam != 2rad-2";
        return rep;
    }
    const auto& centers = ecc.center;
    // Distances among central vertices, for the pairwise-distance-2 sets.
    std::vector<std::vector<int>> rows;
    rows.reserve(centers.size());
    for (int c : centers) rows.push_back(bfs(g, c).dist);

    std::mt19937_64 rng(seed);
    int k = static_cast<int>(centers.size());
    for (int trial = 0; trial < 200 && rep.holds; ++trial) {
        std::vector<int> m{static_cast<int>(rng() % k)};  // center indices
        while (static_cast<int>(m.size()) < 6) {
            std::vector<int> cand;
            for (int j = 0; j < k; ++j) {
                bool ok = true;
                for (int i : m)
                    if (rows[i][centers[j]] != 2) {
                        ok = false;
                        break;
                    }
                if (ok) cand.push_back(j);
            }
            if (cand.empty()) break;
            m.push_back(cand[rng() % cand.size()]);
        }
        bool found = false;
        for (int c : centers) {
            bool universal = true;
            for (int i : m)
                if (!g.has_edge(c, centers[i])) {
                    universal = false;
                    break;
                }
            if (universal) {
                found = true;
                break;
            }
        }
        if (!found) {
            rep.holds = false;
            rep.witness = centers[m[0]];
            rep.detail = "no central vertex universal to a sampled distance-2 set of size " +
                         std::to_string(m.size());
        }
    }
    return rep;
}

}  // namespace dh
