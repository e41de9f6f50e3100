#include "spr/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace spr {

Graph gen_ktree(int n, int k, std::uint64_t seed) {
    if (k < 1 || n < k + 1) throw validation_error("k-tree requires n >= k + 1, k >= 1");
    std::mt19937_64 rng(seed);
    Graph g(n);
    std::vector<std::vector<Vertex>> cliques;  // k-cliques eligible for attachment
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);
    for (int drop = 0; drop <= k; ++drop) {
        std::vector<Vertex> clique;
        for (int u = 0; u <= k; ++u)
            if (u != drop) clique.push_back(u);
        cliques.push_back(std::move(clique));
    }
    for (int v = k + 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
        const auto base = cliques[pick(rng)];
        for (Vertex u : base) g.add_edge(u, v);
        for (Vertex drop : base) {
            std::vector<Vertex> clique;
            for (Vertex u : base)
                if (u != drop) clique.push_back(u);
            clique.push_back(v);
            cliques.push_back(std::move(clique));
        }
    }
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw validation_error("cycle requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw validation_error("invalid random graph parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph line_graph(const Graph& g) {
    auto edges = g.edges();
    Graph lg(static_cast<int>(edges.size()));
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            auto [u1, v1] = edges[a];
            auto [u2, v2] = edges[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                lg.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    return lg;
}

std::pair<Vertex, Vertex> max_distance_pair(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    std::pair<Vertex, Vertex> pair{-1, -1};
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<Vertex> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
        for (Vertex t = 0; t < n; ++t)
            if (dist[t] > best) {
                best = dist[t];
                pair = {s, t};
            }
    }
    if (pair.first < 0) throw validation_error("graph has no connected vertex pair");
    return pair;
}

}  // namespace spr
