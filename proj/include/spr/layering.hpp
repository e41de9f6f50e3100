#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spr/graph.hpp"

namespace spr {

/// A shortest st-path, one vertex per layer: v_0 = s, v_d = t.
using Path = std::vector<Vertex>;

/// A rerouting sequence: consecutive paths differ in exactly one vertex.
using RerouteSequence = std::vector<Path>;

/// BFS layering with respect to s and t. Layer i holds the vertices at
/// distance i from s that lie on some shortest st-path.
struct Layering {
    Vertex s = -1;
    Vertex t = -1;
    int d = 0;                        // shortest st-path length (edge count)
    std::vector<int> dist_s, dist_t;  // -1 if unreachable
    std::vector<std::vector<Vertex>> layers;  // L_0 .. L_d, each sorted

    /// Layer index of v, or -1 if v lies on no shortest st-path.
    int layer_of(Vertex v) const {
        if (dist_s[v] < 0 || dist_t[v] < 0 || dist_s[v] + dist_t[v] != d) return -1;
        return dist_s[v];
    }
};

Layering compute_layering(const Graph& g, Vertex s, Vertex t);

/// Neighbors of v in the previous / next layer. v must lie in a layer.
std::vector<Vertex> in_neighbors(const Graph& g, const Layering& lay, Vertex v);
std::vector<Vertex> out_neighbors(const Graph& g, const Layering& lay, Vertex v);

bool is_shortest_st_path(const Graph& g, const Layering& lay, const Path& p);

struct SequenceViolation {
    std::size_t index;   // first offending path index
    std::string reason;
};

/// nullopt = sequence is valid.
std::optional<SequenceViolation> validate_reroute_sequence(const Graph& g, const Layering& lay,
                                                           const RerouteSequence& seq);

/// Number of vertices in which two equal-length paths differ.
int path_difference(const Path& p, const Path& q);

}  // namespace spr
