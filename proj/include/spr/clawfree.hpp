#pragma once

#include <optional>

#include "spr/layering.hpp"
#include "spr/recognition.hpp"

namespace spr {

/// Hypergraph H_i on layer L_i: hyperedges are the inclusion-maximal
/// in-neighborhoods of L_{i+1}-vertices, each with a witness vertex.
/// Identical in-neighborhoods collapse to the smallest-id witness.
struct LayerHypergraph {
    int layer_index = 0;
    std::vector<Vertex> vertices;  // L_i, sorted
    struct Edge {
        std::vector<Vertex> members;  // sorted, = N^-(witness)
        Vertex witness;               // in L_{i+1}
    };
    std::vector<Edge> edges;

    /// Component id per vertex of L_i (indexed like `vertices`); two
    /// vertices are connected iff linked through shared hyperedges.
    std::vector<int> component;
    int component_count = 0;

    int component_of(Vertex v) const;
};

/// Requires 1 <= i <= d-1.
LayerHypergraph build_layer_hypergraph(const Graph& g, const Layering& lay, int i);

/// An st-reduced instance: every vertex on a shortest st-path, every H_i
/// connected, interior layers cliques. Vertex ids are preserved; dropped
/// vertices are isolated in `graph` and absent from `layering`.
struct ReducedInstance {
    Graph graph;
    Layering layering;
    std::vector<char> kept;
    Path base_path;

    int kept_count() const;
};

/// Deletes, to a fixpoint: vertices off all shortest st-paths, vertices
/// outside P's H_i-component per layer, and interior-layer vertices
/// non-adjacent to P's layer vertex. Throws not_claw_free on a claw.
ReducedInstance st_reduce(const Graph& g, const Layering& lay, const Path& P);

/// Result of a normalization sweep: final path plus the full sequence from
/// the input path (front = input, back = result).
struct NormalizeResult {
    Path path;
    RerouteSequence steps;
};

/// Ascending sweep making every path vertex's out-neighborhood maximal
/// within its layer (<= d-1 steps). Candidates prefer out-neighbors of the
/// previous path vertex, then smallest id.
NormalizeResult normalize_max_out(const ReducedInstance& inst, const Path& P);
/// Mirrored descending sweep for in-neighborhoods.
NormalizeResult normalize_max_in(const ReducedInstance& inst, const Path& P);

/// Moves P's L_i-vertex to w using at most 2|L_i| steps, touching only
/// layers i and i+1 (plus a temporary detour in layer i-1). Requires
/// maximal out-neighborhood at P[i-1], maximal in-neighborhood at P[i+1],
/// and w in N^+(P[i-1]). Returns the sequence from P (front = P).
RerouteSequence reroute_layer(const ReducedInstance& inst, const Path& P, int i, Vertex w);

/// Rerouting sequence P -> Q of length <= 2n + 2d - 6 on an st-reduced
/// instance (n = kept vertices).
RerouteSequence clawfree_reroute_reduced(const ReducedInstance& inst, const Path& P,
                                         const Path& Q);

/// Reachability in SP(G,s,t) for claw-free g: nullopt if unreachable, else
/// a rerouting sequence. Throws not_claw_free with witness otherwise.
std::optional<RerouteSequence> clawfree_reachable(const Graph& g, const Layering& lay,
                                                  const Path& P, const Path& Q);

/// Whether SP(G,s,t) is connected, for claw-free g.
bool clawfree_connected(const Graph& g, Vertex s, Vertex t);

/// Lexicographically smallest shortest st-path.
Path lexmin_shortest_path(const Graph& g, const Layering& lay);

/// True iff v's out-(resp. in-)neighborhood is maximal within its layer.
bool has_maximal_out_neighborhood(const Graph& g, const Layering& lay, Vertex v);
bool has_maximal_in_neighborhood(const Graph& g, const Layering& lay, Vertex v);

}  // namespace spr
