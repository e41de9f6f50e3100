#pragma once

#include <cstdint>
#include <utility>

#include "spr/graph.hpp"

namespace spr {

/// Random k-tree on n vertices (chordal by construction). n >= k + 1.
Graph gen_ktree(int n, int k, std::uint64_t seed);

/// Cycle C_n, vertices 0..n-1. n >= 3.
Graph gen_cycle(int n);

/// Erdos-Renyi G(n, p).
Graph gen_random_graph(int n, double p, std::uint64_t seed);

/// Line graph of g: one vertex per edge, adjacency iff the edges share an
/// endpoint. Claw-free by construction.
Graph line_graph(const Graph& g);

/// Pair (u, v) maximizing BFS distance, smallest ids on ties. Throws
/// validation_error if no two vertices are connected.
std::pair<Vertex, Vertex> max_distance_pair(const Graph& g);

}  // namespace spr
