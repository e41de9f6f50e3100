#include "spr/graph.hpp"

#include <algorithm>
#include <sstream>

namespace spr {

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < vertex_count(); ++v) twice += adj_[v].size();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw validation_error("edge endpoint out of range");
    if (u == v) throw validation_error("self-loop");
    if (adjacent(u, v)) throw validation_error("duplicate edge");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Graph Graph::induced(const std::vector<char>& kept) const {
    Graph g(vertex_count());
    for (int u = 0; u < vertex_count(); ++u) {
        if (!kept[u]) continue;
        for (Vertex v : adj_[u])
            if (v > u && kept[v]) g.add_edge(u, v);
    }
    return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

namespace {

// Splits a line into whitespace tokens.
std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int lineno) {
    std::size_t pos = 0;
    int value;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(lineno, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw parse_error(lineno, "expected integer, got '" + tok + "'");
    return value;
}

}  // namespace

ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_p = false, have_st = false;
    int declared_edges = 0, seen_edges = 0;
    ParsedGraph result;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (have_p) throw parse_error(lineno, "duplicate 'p' directive");
            if (toks.size() != 3) throw parse_error(lineno, "expected 'p <n> <m>'");
            int n = parse_int(toks[1], lineno);
            declared_edges = parse_int(toks[2], lineno);
            if (n < 0 || declared_edges < 0) throw parse_error(lineno, "negative count");
            result.graph = Graph(n);
            have_p = true;
        } else if (toks[0] == "e") {
            if (!have_p) throw parse_error(lineno, "'e' before 'p'");
            if (have_st) throw parse_error(lineno, "'e' after 'st'");
            if (toks.size() != 3) throw parse_error(lineno, "expected 'e <u> <v>'");
            int u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
            int n = result.graph.vertex_count();
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw parse_error(lineno, "self-loop");
            if (result.graph.adjacent(u - 1, v - 1)) throw parse_error(lineno, "duplicate edge");
            result.graph.add_edge(u - 1, v - 1);
            ++seen_edges;
        } else if (toks[0] == "st") {
            if (!have_p) throw parse_error(lineno, "'st' before 'p'");
            if (have_st) throw parse_error(lineno, "duplicate 'st' directive");
            if (toks.size() != 3) throw parse_error(lineno, "expected 'st <s> <t>'");
            int s = parse_int(toks[1], lineno), t = parse_int(toks[2], lineno);
            int n = result.graph.vertex_count();
            if (s < 1 || s > n || t < 1 || t > n)
                throw parse_error(lineno, "vertex id out of range 1.." + std::to_string(n));
            result.s = s - 1;
            result.t = t - 1;
            have_st = true;
        } else {
            throw parse_error(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_p) throw parse_error(lineno, "missing 'p' directive");
    if (!have_st) throw parse_error(lineno, "missing 'st' directive");
    if (seen_edges != declared_edges)
        throw parse_error(lineno, "declared " + std::to_string(declared_edges) + " edges, found " +
                                      std::to_string(seen_edges));
    return result;
}

std::string serialize_graph(const Graph& g, Vertex s, Vertex t) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    out << "st " << s + 1 << " " << t + 1 << "\n";
    return out.str();
}

}  // namespace spr
