// Weighted labelled graphs with detours: realizations of (possibly
// asymmetric) nonnegative zero-diagonal matrices.  A detour from i to j is a
// walk whose weight overrides the shortest-path entry (i,j); it must be
// strictly longer than the minimal path.
#pragma once

#include <map>

#include "matrix.hpp"

namespace tropgossip {

struct Detour {
    int from = 0, to = 0;            // matrix indices (0-based)
    std::vector<int> walk;           // vertex sequence from label(from) to label(to)
};

struct DetourGraph {
    int num_vertices = 0;
    std::vector<std::tuple<int, int, Rat>> edges;  // undirected, nonnegative weights
    std::vector<int> labelling;                    // labelling[i] = vertex of index i
    std::vector<Detour> detours;

    int n() const { return int(labelling.size()); }
};

namespace detail_detour {

inline std::map<std::pair<int, int>, Rat> edge_weights(const DetourGraph& g) {
    std::map<std::pair<int, int>, Rat> w;
    for (auto& [u, v, wt] : g.edges) {
        if (u == v) throw std::invalid_argument("detour graph: loop edge");
        if (wt < 0) throw std::invalid_argument("detour graph: negative edge weight");
        auto key = std::minmax(u, v);
        auto it = w.find(key);
        if (it == w.end() || wt < it->second) w[key] = wt;
    }
    return w;
}

/// All-pairs shortest path distances between graph vertices.
inline std::vector<std::vector<TropScalar>> vertex_distances(const DetourGraph& g) {
    const int V = g.num_vertices;
    std::vector<std::vector<TropScalar>> d(V, std::vector<TropScalar>(V, TropScalar::infinity()));
    for (int v = 0; v < V; ++v) d[v][v] = TropScalar(0);
    for (auto& [key, wt] : edge_weights(g)) {
        TropScalar w{wt};
        if (w < d[key.first][key.second]) {
            d[key.first][key.second] = w;
            d[key.second][key.first] = w;
        }
    }
    for (int k = 0; k < V; ++k)
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j)
                d[i][j] = trop_add(d[i][j], trop_mul(d[i][k], d[k][j]));
    return d;
}

inline Rat walk_weight(const DetourGraph& g, const std::vector<int>& walk) {
    auto w = edge_weights(g);
    Rat total = 0;
    for (size_t t = 0; t + 1 < walk.size(); ++t) {
        auto it = w.find(std::minmax(walk[t], walk[t + 1]));
        if (it == w.end()) throw std::invalid_argument("detour walk uses a missing edge");
        total += it->second;
    }
    return total;
}

}  // namespace detail_detour

/// Entry (i,j) is the detour weight when a detour (i,j,...) exists, else the
/// minimal path weight between the labelled vertices.  Validates the detour
/// invariants: endpoints match the labelling and every detour is strictly
/// longer than the shortest path.
inline TropMatrix realize(const DetourGraph& g) {
    const int n = g.n();
    auto dist = detail_detour::vertex_distances(g);
    TropMatrix m(n, TropScalar(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m.set(i, j, dist[g.labelling[i]][g.labelling[j]]);
    std::set<std::pair<int, int>> seen;
    for (const Detour& d : g.detours) {
        if (d.from == d.to) throw std::invalid_argument("detour endpoints must differ");
        if (!seen.insert({d.from, d.to}).second)
            throw std::invalid_argument("at most one detour per ordered pair");
        if (d.walk.front() != g.labelling[d.from] || d.walk.back() != g.labelling[d.to])
            throw std::invalid_argument("detour walk does not join the labelled endpoints");
        Rat w = detail_detour::walk_weight(g, d.walk);
        TropScalar shortest = dist[g.labelling[d.from]][g.labelling[d.to]];
        if (!(TropScalar(w) > shortest))
            throw std::invalid_argument("detour is not longer than the minimal path");
        m.set(d.from, d.to, TropScalar(w));
    }
    return m;
}

/// Reverse every detour; realizes the transposed matrix.
inline DetourGraph transpose_detours(const DetourGraph& g) {
    DetourGraph t = g;
    for (Detour& d : t.detours) {
        std::swap(d.from, d.to);
        std::reverse(d.walk.begin(), d.walk.end());
    }
    return t;
}

/// True iff the graph without its detours realizes the Kleene star of the
/// realized matrix.
inline bool kleene_compatible(const DetourGraph& g) {
    TropMatrix a = realize(g);
    DetourGraph bare = g;
    bare.detours.clear();
    return realize(bare) == kleene_star(a);
}

/// The path graph with one detour: realizes [[0, 3a+b], [a+b, 0]].
inline DetourGraph detour_example_path(const Rat& a, const Rat& b) {
    DetourGraph g;
    g.num_vertices = 3;
    g.edges = {{0, 1, a}, {1, 2, b}};
    g.labelling = {0, 2};
    g.detours = {{0, 1, {0, 1, 0, 1, 2}}};
    return g;
}

/// The C10 graph: a path 1-2-3-4 with pendant loops, four detours, realizing
/// the displayed six-parameter family of G_4 matrices.  Vertices 0..3 carry
/// the labels; 4, 5 are the pendants at vertex 1 (weights b, c) and 6 the
/// pendant at vertex 2 (weight e).
inline DetourGraph c10_graph(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                             const Rat& e, const Rat& f) {
    DetourGraph g;
    g.num_vertices = 7;
    g.edges = {{0, 1, a}, {1, 2, d}, {2, 3, f}, {1, 4, b}, {1, 5, c}, {2, 6, e}};
    g.labelling = {0, 1, 2, 3};
    g.detours = {
        {0, 3, {0, 1, 4, 1, 2, 6, 2, 3}},  // a + 2b + d + 2e + f
        {1, 3, {1, 5, 1, 2, 6, 2, 3}},     // 2c + d + 2e + f
        {3, 0, {3, 2, 6, 2, 1, 0}},        // f + 2e + d + a
        {3, 1, {3, 2, 6, 2, 1}},           // f + 2e + d
    };
    return g;
}

}  // namespace tropgossip
