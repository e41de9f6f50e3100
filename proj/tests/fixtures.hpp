#pragma once

#include <initializer_list>
#include <vector>

#include "spr/graph.hpp"
#include "spr/layering.hpp"

namespace fixtures {

using spr::Graph;
using spr::Vertex;

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

struct Instance {
    Graph graph;
    Vertex s, t;
};

// K2: single edge s-t.
inline Instance k2() { return {make_graph(2, {{0, 1}}), 0, 1}; }

// DIAMOND: s=0, a=1, b=2, t=3 with edges sa, sb, at, bt, ab.
// Chordal and claw-free, d = 2.
inline Instance diamond() {
    return {make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}}), 0, 3};
}

// C6 with s, t antipodal: claw-free, not chordal, d = 3.
inline Instance c6() {
    return {make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 0, 3};
}

// C4 with s, t antipodal.
inline Instance c4() { return {make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 2}; }

inline Graph petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5.
    return make_graph(10, {{0, 1},
                           {1, 2},
                           {2, 3},
                           {3, 4},
                           {4, 0},
                           {5, 7},
                           {7, 9},
                           {9, 6},
                           {6, 8},
                           {8, 5},
                           {0, 5},
                           {1, 6},
                           {2, 7},
                           {3, 8},
                           {4, 9}});
}

// Exhaustive induced-claw scan over all (center, triple) combinations.
inline bool has_claw_brute_force(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int e = b + 1; e < n; ++e) {
                    if (a == c || b == c || e == c) continue;
                    if (!g.adjacent(c, a) || !g.adjacent(c, b) || !g.adjacent(c, e)) continue;
                    if (!g.adjacent(a, b) && !g.adjacent(a, e) && !g.adjacent(b, e)) return true;
                }
    return false;
}

// Exhaustive search for an induced cycle of length >= 4 (small n only).
inline bool has_long_induced_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Vertex> path;
    std::vector<char> used(n, 0);
    // Grows induced paths (chords to non-start vertices forbidden); closes
    // a cycle when the last vertex sees the start and no interior vertex
    // besides the second one does.
    auto dfs = [&](auto&& self, Vertex start) -> bool {
        Vertex last = path.back();
        if (path.size() >= 4 && g.adjacent(last, start)) {
            bool induced = true;
            for (std::size_t i = 2; i + 1 < path.size(); ++i)
                if (g.adjacent(path[i], start)) induced = false;
            if (induced) return true;
        }
        for (Vertex w = start + 1; w < n; ++w) {
            if (used[w] || !g.adjacent(last, w)) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.adjacent(path[i], w)) chord = true;
            if (chord) continue;
            used[w] = 1;
            path.push_back(w);
            if (self(self, start)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    };
    for (Vertex v = 0; v < n; ++v) {
        used.assign(n, 0);
        used[v] = 1;
        path = {v};
        if (dfs(dfs, v)) return true;
    }
    return false;
}

}  // namespace fixtures
