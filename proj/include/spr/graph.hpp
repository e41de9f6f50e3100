#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spr {

using Vertex = int;

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct capacity_error : std::runtime_error {
    std::size_t cap;
    explicit capacity_error(std::size_t cap_)
        : std::runtime_error("capacity of " + std::to_string(cap_) + " exceeded"), cap(cap_) {}
};

/// Undirected simple graph over dense 0-based vertex ids.
/// Adjacency lists are kept sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;

    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    /// Edge-induced subgraph on the kept vertices; vertex ids are preserved,
    /// dropped vertices simply become isolated.
    Graph induced(const std::vector<char>& kept) const;

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
};

struct ParsedGraph {
    Graph graph;
    Vertex s = -1;
    Vertex t = -1;
};

// Graph file format: '#' comments, "p <n> <m>", m lines "e <u> <v>" (1-based),
// final "st <s> <t>".
ParsedGraph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g, Vertex s, Vertex t);

}  // namespace spr
