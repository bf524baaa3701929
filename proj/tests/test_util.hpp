#ifndef DH_TEST_UTIL_HPP
#define DH_TEST_UTIL_HPP

#include <random>

#include "dh/builders.hpp"
#include "dh/graph.hpp"

namespace testutil {

inline dh::Graph er_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) e.emplace_back(i, j);
    return dh::make_graph(n, e);
}

inline dh::Graph er_connected(int n, double p, std::mt19937_64& rng) {
    for (;;) {
        auto g = er_graph(n, p, rng);
        if (dh::is_connected(g)) return g;
    }
}

inline dh::Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        e.emplace_back(v, static_cast<int>(rng() % static_cast<std::uint64_t>(v)));
    return dh::make_graph(n, e);
}

// The shared corpus used by invariant sweeps: size derived from the
// instance index so every run is identical.
inline dh::Graph corpus_graph(int index, int max_n, std::uint64_t seed_base) {
    std::uint64_t s = seed_base + static_cast<std::uint64_t>(index);
    int n = 1 + static_cast<int>(s * 2654435761ull % static_cast<std::uint64_t>(max_n));
    return dh::random_dh(n, s).graph;
}

}  // namespace testutil

#endif
