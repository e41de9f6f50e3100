#include "spr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace spr {

std::vector<Path> enumerate_shortest_paths(const Graph& g, const Layering& lay, std::size_t cap) {
    std::vector<Path> out;
    Path cur{lay.s};
    // Iterative DFS over sorted out-neighborhoods gives lexicographic order.
    std::vector<std::vector<Vertex>> stack{out_neighbors(g, lay, lay.s)};
    for (auto& v : stack) std::reverse(v.begin(), v.end());
    while (!stack.empty()) {
        if (stack.back().empty()) {
            stack.pop_back();
            cur.pop_back();
            continue;
        }
        Vertex v = stack.back().back();
        stack.back().pop_back();
        cur.push_back(v);
        if (static_cast<int>(cur.size()) == lay.d + 1) {
            if (out.size() >= cap) throw capacity_error(cap);
            out.push_back(cur);
            cur.pop_back();
        } else {
            auto next = out_neighbors(g, lay, v);
            std::reverse(next.begin(), next.end());
            stack.push_back(std::move(next));
        }
    }
    return out;
}

BigInt count_shortest_paths(const Graph& g, const Layering& lay) {
    std::vector<BigInt> cnt(g.vertex_count(), 0);
    cnt[lay.s] = 1;
    for (int i = 1; i <= lay.d; ++i)
        for (Vertex v : lay.layers[i])
            for (Vertex u : in_neighbors(g, lay, v)) cnt[v] += cnt[u];
    return cnt[lay.t];
}

namespace {

// Edges contributed by layer i: paths identical everywhere except layer i
// form a clique in the solution graph.
std::vector<std::pair<int, int>> layer_edges(const std::vector<Path>& paths, std::size_t i) {
    std::map<Path, std::vector<int>> groups;
    for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
        Path key = paths[p];
        key[i] = -1;
        groups[std::move(key)].push_back(p);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [key, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                edges.emplace_back(members[a], members[b]);
    return edges;
}

SolutionGraph assemble(const std::vector<Path>& paths,
                       const std::vector<std::vector<std::pair<int, int>>>& per_layer) {
    SolutionGraph sg;
    sg.paths = paths;
    sg.adj.assign(paths.size(), {});
    for (const auto& edges : per_layer)
        for (auto [a, b] : edges) {
            sg.adj[a].push_back(b);
            sg.adj[b].push_back(a);
        }
    for (auto& nb : sg.adj) std::sort(nb.begin(), nb.end());
    return sg;
}

void check_input(const std::vector<Path>& paths) {
    std::map<Path, int> seen;
    for (int p = 0; p < static_cast<int>(paths.size()); ++p)
        if (!seen.emplace(paths[p], p).second) throw validation_error("duplicate path in input");
}

}  // namespace

SolutionGraph build_solution_graph_serial(const std::vector<Path>& paths) {
    check_input(paths);
    std::size_t len = paths.empty() ? 0 : paths.front().size();
    std::vector<std::vector<std::pair<int, int>>> per_layer;
    for (std::size_t i = 1; i + 1 < len; ++i) per_layer.push_back(layer_edges(paths, i));
    return assemble(paths, per_layer);
}

SolutionGraph build_solution_graph(const std::vector<Path>& paths) {
    check_input(paths);
    std::size_t len = paths.empty() ? 0 : paths.front().size();
    int inner = len >= 2 ? static_cast<int>(len) - 2 : 0;
    std::vector<std::vector<std::pair<int, int>>> per_layer(inner);
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i <= inner; ++i) per_layer[i - 1] = layer_edges(paths, i);
    return assemble(paths, per_layer);
}

namespace {

int path_index(const SolutionGraph& sg, const Path& p) {
    for (int i = 0; i < static_cast<int>(sg.paths.size()); ++i)
        if (sg.paths[i] == p) return i;
    throw validation_error("path is not a solution");
}

}  // namespace

std::optional<int> oracle_reachable(const SolutionGraph& sg, const Path& P, const Path& Q) {
    int from = path_index(sg, P), to = path_index(sg, Q);
    std::vector<int> dist(sg.paths.size(), -1);
    std::deque<int> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) return dist[v];
        for (int w : sg.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return std::nullopt;
}

bool oracle_connected(const SolutionGraph& sg) {
    if (sg.paths.empty()) throw validation_error("no st-path: empty solution graph");
    std::vector<char> seen(sg.paths.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : sg.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    return count == sg.paths.size();
}

std::size_t oracle_isolated_count(const SolutionGraph& sg) {
    if (sg.paths.empty()) throw validation_error("no st-path: empty solution graph");
    std::size_t count = 0;
    for (const auto& nb : sg.adj)
        if (nb.empty()) ++count;
    return count;
}

std::vector<Path> oracle_component(const Graph& g, const Layering& lay, const Path& P,
                                   std::size_t cap) {
    if (!is_shortest_st_path(g, lay, P)) throw validation_error("path is not a solution");
    if (cap == 0) throw capacity_error(cap);
    std::map<Path, char> seen{{P, 1}};
    std::deque<Path> queue{P};
    std::vector<Path> out;
    while (!queue.empty()) {
        Path cur = queue.front();
        queue.pop_front();
        out.push_back(cur);
        for (int i = 1; i < lay.d; ++i) {
            for (Vertex w : lay.layers[i]) {
                if (w == cur[i]) continue;
                if (!g.adjacent(cur[i - 1], w) || !g.adjacent(w, cur[i + 1])) continue;
                Path next = cur;
                next[i] = w;
                if (seen.emplace(next, 1).second) {
                    if (seen.size() > cap) throw capacity_error(cap);
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return out;
}

bool is_proper_coloring(const Graph& g, int k, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (c[v] < 1 || c[v] > k) return false;
        for (Vertex w : g.neighbors(v))
            if (c[w] == c[v]) return false;
    }
    return true;
}

std::optional<std::vector<Coloring>> color_oracle(const Graph& g, int k, const Coloring& alpha,
                                                  const Coloring& beta, std::size_t cap) {
    if (!is_proper_coloring(g, k, alpha) || !is_proper_coloring(g, k, beta))
        throw validation_error("input is not a proper k-coloring");
    std::map<Coloring, Coloring> pred{{alpha, {}}};
    if (pred.size() > cap) throw capacity_error(cap);
    std::deque<Coloring> queue{alpha};
    while (!queue.empty()) {
        Coloring cur = queue.front();
        queue.pop_front();
        if (cur == beta) {
            std::vector<Coloring> seq{cur};
            while (seq.back() != alpha) seq.push_back(pred.at(seq.back()));
            std::reverse(seq.begin(), seq.end());
            return seq;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int c = 1; c <= k; ++c) {
                if (c == cur[v]) continue;
                bool proper = true;
                for (Vertex w : g.neighbors(v))
                    if (cur[w] == c) {
                        proper = false;
                        break;
                    }
                if (!proper) continue;
                Coloring next = cur;
                next[v] = c;
                if (pred.emplace(next, cur).second) {
                    if (pred.size() > cap) throw capacity_error(cap);
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace spr
