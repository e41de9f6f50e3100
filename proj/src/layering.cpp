#include "spr/layering.hpp"

#include <deque>

namespace spr {

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex from) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

Layering compute_layering(const Graph& g, Vertex s, Vertex t) {
    if (s == t) throw validation_error("invalid endpoints: s = t");
    Layering lay;
    lay.s = s;
    lay.t = t;
    lay.dist_s = bfs_distances(g, s);
    lay.dist_t = bfs_distances(g, t);
    if (lay.dist_s[t] < 0) throw validation_error("no st-path: t unreachable from s");
    lay.d = lay.dist_s[t];
    lay.layers.assign(lay.d + 1, {});
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int i = lay.layer_of(v);
        if (i >= 0) lay.layers[i].push_back(v);  // ascending since v ascends
    }
    return lay;
}

std::vector<Vertex> in_neighbors(const Graph& g, const Layering& lay, Vertex v) {
    std::vector<Vertex> out;
    int i = lay.layer_of(v);
    for (Vertex w : g.neighbors(v))
        if (lay.layer_of(w) == i - 1) out.push_back(w);
    return out;
}

std::vector<Vertex> out_neighbors(const Graph& g, const Layering& lay, Vertex v) {
    std::vector<Vertex> out;
    int i = lay.layer_of(v);
    for (Vertex w : g.neighbors(v))
        if (lay.layer_of(w) >= 0 && lay.layer_of(w) == i + 1) out.push_back(w);
    return out;
}

bool is_shortest_st_path(const Graph& g, const Layering& lay, const Path& p) {
    if (static_cast<int>(p.size()) != lay.d + 1) return false;
    if (p.front() != lay.s || p.back() != lay.t) return false;
    for (int i = 0; i <= lay.d; ++i) {
        if (p[i] < 0 || p[i] >= g.vertex_count()) return false;
        if (lay.layer_of(p[i]) != i) return false;
        if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    }
    return true;
}

std::optional<SequenceViolation> validate_reroute_sequence(const Graph& g, const Layering& lay,
                                                           const RerouteSequence& seq) {
    if (seq.empty()) return SequenceViolation{0, "empty sequence"};
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (!is_shortest_st_path(g, lay, seq[j]))
            return SequenceViolation{j, "not a shortest st-path"};
        if (j > 0) {
            int diff = path_difference(seq[j - 1], seq[j]);
            if (diff != 1)
                return SequenceViolation{j, "differs in " + std::to_string(diff) + " vertices"};
        }
    }
    return std::nullopt;
}

int path_difference(const Path& p, const Path& q) {
    int diff = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != q[i]) ++diff;
    return diff;
}

}  // namespace spr
