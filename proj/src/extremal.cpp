#include "dh/extremal.hpp"

#include <cmath>
#include <string>

namespace dh {

namespace {

// Furthest vertex, smallest id on ties; also reports the eccentricity.
std::pair<int, int> furthest(const std::vector<int>& dist) {
    int best = 0, arg = 0;
    for (int v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] > best) {
            best = dist[v];
            arg = v;
        }
    return {arg, best};
}

}  // namespace

MutuallyDistantPair mutually_distant_pair(const Graph& g, int start) {
    if (start < 0 || start >= g.n) throw OutOfRange("start vertex out of range");
    MutuallyDistantPair pair;
    if (g.n == 1) {
        pair.x = pair.y = start;
        return pair;
    }
    if (!is_connected(g)) throw DisconnectedGraph();

    int prev = start;
    auto [cur, d_prev_cur] = furthest(bfs(g, start).dist);
    pair.sweeps = 1;
    // Iterate v_{i+1} in F(v_i) until the distance stops increasing; the
    // stabilized pair is mutually distant.
    for (;;) {
        auto [next, e_cur] = furthest(bfs(g, cur).dist);
        ++pair.sweeps;
        if (e_cur == d_prev_cur) {
            pair.x = prev;
            pair.y = cur;
            pair.dist = e_cur;
            return pair;
        }
        prev = cur;
        cur = next;
        d_prev_cur = e_cur;
    }
}

EccBounds ecc_bounds_from_pair(const Graph& g, const MutuallyDistantPair& pair,
                               const std::vector<int>* known_center) {
    auto dx = bfs(g, pair.x).dist;
    auto dy = bfs(g, pair.y).dist;
    bool odd = (dx[pair.y] % 2) == 1;
    std::vector<bool> central(g.n, false);
    if (known_center)
        for (int c : *known_center) central[c] = true;
    EccBounds b;
    b.lower.resize(g.n);
    b.upper.resize(g.n);
    for (int u = 0; u < g.n; ++u) {
        int lo = std::max(dx[u], dy[u]);
        int gap = std::abs(dx[u] - dy[u]);
        int add;
        if (gap >= 2)
            add = 0;
        else if (gap == 1 || odd || central[u])
            add = 1;
        else
            add = 2;
        b.lower[u] = lo;
        b.upper[u] = lo + add;
    }
    return b;
}

DualityReport duality_audit(const Graph& g, const MutuallyDistantPair& pair,
                            int u) {
    DualityReport rep;
    auto du = bfs(g, u).dist;
    auto [v, eu] = furthest(du);
    auto dv = bfs(g, v).dist;
    auto dx = bfs(g, pair.x).dist;
    int dxy = dx[pair.y];

    auto fail = [&rep, u](const std::string& what) {
        rep.holds = false;
        rep.vertex = u;
        if (rep.detail.empty()) rep.detail = what;
    };

    {
        int a = du[pair.x], b = du[pair.y];
        int hi = std::max(a, b), lo = std::min(a, b);
        if (!(hi <= eu && eu <= std::max(hi, lo + 2)))
            fail("e(u) outside pair sandwich");
        if (eu == hi + 2) {
            if (!(a == b && a == eu - 2)) fail("+2 case: unequal pair distances");
            if (!(dv[pair.x] == dxy && dv[pair.y] == dxy))
                fail("+2 case: furthest vertex not maximally distant from pair");
        }
    }
    {
        int a = dv[pair.x], b = dv[pair.y];
        int hi = std::max(a, b), lo = std::min(a, b);
        if (!(hi <= dxy && dxy <= std::max(hi, lo + 2)))
            fail("d(x,y) outside furthest-vertex sandwich");
        if (dxy == hi + 2) {
            if (!(a == b && a == dxy - 2)) fail("+2 case: unequal furthest distances");
            if (!(du[pair.x] == eu && du[pair.y] == eu))
                fail("+2 case: u not equidistant at e(u)");
        }
    }
    return rep;
}

}  // namespace dh
