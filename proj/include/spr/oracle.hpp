#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "spr/layering.hpp"

namespace spr {

using BigInt = boost::multiprecision::cpp_int;

constexpr std::size_t kDefaultCap = 1000000;

/// The graph SP(G,s,t) on all shortest st-paths; paths adjacent iff they
/// differ in exactly one vertex.
struct SolutionGraph {
    std::vector<Path> paths;                // duplicate-free
    std::vector<std::vector<int>> adj;      // per path, sorted path indices
};

/// All shortest st-paths in lexicographic vertex order. Throws
/// capacity_error if more than `cap` paths exist.
std::vector<Path> enumerate_shortest_paths(const Graph& g, const Layering& lay,
                                           std::size_t cap = kDefaultCap);

/// Number of shortest st-paths (layered DAG path-count recurrence).
BigInt count_shortest_paths(const Graph& g, const Layering& lay);

/// Adjacency built by grouping paths on "path minus layer i" keys;
/// OpenMP-parallel over layers.
SolutionGraph build_solution_graph(const std::vector<Path>& paths);
/// Serial reference; identical result.
SolutionGraph build_solution_graph_serial(const std::vector<Path>& paths);

/// BFS distance from P to Q in the solution graph, nullopt if unreachable.
/// Throws validation_error if either path is absent.
std::optional<int> oracle_reachable(const SolutionGraph& sg, const Path& P, const Path& Q);

bool oracle_connected(const SolutionGraph& sg);
std::size_t oracle_isolated_count(const SolutionGraph& sg);

/// Component of P in SP(G,s,t), computing neighbors lazily, in BFS
/// discovery order. Throws capacity_error if the component exceeds `cap`.
std::vector<Path> oracle_component(const Graph& g, const Layering& lay, const Path& P,
                                   std::size_t cap = kDefaultCap);

// ---- k-coloring reconfiguration oracle --------------------------------

using Coloring = std::vector<int>;  // per-vertex colors in 1..k

bool is_proper_coloring(const Graph& g, int k, const Coloring& c);

/// Shortest recoloring sequence from alpha to beta (BFS over proper
/// colorings, one vertex changed per step), nullopt if unreachable.
/// Throws validation_error on improper inputs, capacity_error if more than
/// `cap` colorings are discovered.
std::optional<std::vector<Coloring>> color_oracle(const Graph& g, int k, const Coloring& alpha,
                                                  const Coloring& beta,
                                                  std::size_t cap = kDefaultCap);

}  // namespace spr
