#include "spr/clawfree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace spr {

namespace {

// a is a strict subset of b; both sorted.
bool strict_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int LayerHypergraph::component_of(Vertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw validation_error("vertex not in layer");
    return component[it - vertices.begin()];
}

LayerHypergraph build_layer_hypergraph(const Graph& g, const Layering& lay, int i) {
    if (i < 1 || i > lay.d - 1) throw validation_error("layer index out of range");
    LayerHypergraph h;
    h.layer_index = i;
    h.vertices = lay.layers[i];

    // Candidate sets N^-(a) for a in L_{i+1}; identical sets collapse to the
    // smallest-id witness, then non-maximal sets are dropped.
    std::map<std::vector<Vertex>, Vertex> candidates;
    for (Vertex a : lay.layers[i + 1]) candidates.try_emplace(in_neighbors(g, lay, a), a);
    for (const auto& [set, witness] : candidates) {
        bool maximal = true;
        for (const auto& [other, w2] : candidates)
            if (strict_subset(set, other)) {
                maximal = false;
                break;
            }
        if (maximal) h.edges.push_back({set, witness});
    }

    Dsu dsu(static_cast<int>(h.vertices.size()));
    auto index_of = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                                h.vertices.begin());
    };
    for (const auto& e : h.edges)
        for (std::size_t m = 1; m < e.members.size(); ++m)
            dsu.unite(index_of(e.members[0]), index_of(e.members[m]));

    h.component.assign(h.vertices.size(), -1);
    std::map<int, int> relabel;
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
        int root = dsu.find(static_cast<int>(v));
        auto [it, fresh] = relabel.try_emplace(root, h.component_count);
        if (fresh) ++h.component_count;
        h.component[v] = it->second;
    }
    return h;
}

bool has_maximal_out_neighborhood(const Graph& g, const Layering& lay, Vertex v) {
    int i = lay.layer_of(v);
    auto mine = out_neighbors(g, lay, v);
    for (Vertex u : lay.layers[i])
        if (u != v && strict_subset(mine, out_neighbors(g, lay, u))) return false;
    return true;
}

bool has_maximal_in_neighborhood(const Graph& g, const Layering& lay, Vertex v) {
    int i = lay.layer_of(v);
    auto mine = in_neighbors(g, lay, v);
    for (Vertex u : lay.layers[i])
        if (u != v && strict_subset(mine, in_neighbors(g, lay, u))) return false;
    return true;
}

int ReducedInstance::kept_count() const {
    return static_cast<int>(std::count(kept.begin(), kept.end(), 1));
}

ReducedInstance st_reduce(const Graph& g, const Layering& lay, const Path& P) {
    if (auto claw = find_claw(g)) throw not_claw_free(*claw);
    if (!is_shortest_st_path(g, lay, P)) throw validation_error("input is not a shortest st-path");

    ReducedInstance inst;
    inst.base_path = P;
    inst.kept.assign(g.vertex_count(), 1);
    for (;;) {
        inst.graph = g.induced(inst.kept);
        inst.layering = compute_layering(inst.graph, lay.s, lay.t);
        std::vector<char> next(g.vertex_count(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (inst.layering.layer_of(v) >= 0) next[v] = 1;
        for (int i = 1; i <= inst.layering.d - 1; ++i) {
            auto h = build_layer_hypergraph(inst.graph, inst.layering, i);
            int base = h.component_of(P[i]);
            for (Vertex v : inst.layering.layers[i])
                if (h.component_of(v) != base) next[v] = 0;
        }
        for (int i = 2; i <= inst.layering.d - 2; ++i)
            for (Vertex v : inst.layering.layers[i])
                if (v != P[i] && !inst.graph.adjacent(v, P[i])) next[v] = 0;
        if (next == inst.kept) break;
        inst.kept = std::move(next);
    }
    return inst;
}

namespace {

NormalizeResult normalize_sweep(const ReducedInstance& inst, const Path& P, bool out_variant) {
    const Graph& g = inst.graph;
    const Layering& lay = inst.layering;
    if (!is_shortest_st_path(g, lay, P)) throw validation_error("input is not a shortest st-path");

    NormalizeResult res{P, {P}};
    auto nbhd = [&](Vertex v) {
        return out_variant ? out_neighbors(g, lay, v) : in_neighbors(g, lay, v);
    };
    auto sweep_step = [&](int i) {
        Vertex u = res.path[i];
        auto mine = nbhd(u);
        // Candidates: strict supersets that are themselves maximal;
        // preference to neighbors of the already-processed path vertex,
        // ties by smallest id (layer lists are sorted).
        Vertex anchor = out_variant ? res.path[i - 1] : res.path[i + 1];
        Vertex best = -1, best_pref = -1;
        for (Vertex v : lay.layers[i]) {
            if (v == u || !strict_subset(mine, nbhd(v))) continue;
            bool maximal = out_variant ? has_maximal_out_neighborhood(g, lay, v)
                                       : has_maximal_in_neighborhood(g, lay, v);
            if (!maximal) continue;
            if (best < 0) best = v;
            if (best_pref < 0 && g.adjacent(anchor, v)) best_pref = v;
        }
        Vertex pick = best_pref >= 0 ? best_pref : best;
        if (pick >= 0) {
            res.path[i] = pick;
            res.steps.push_back(res.path);
        }
    };
    if (out_variant)
        for (int i = 1; i <= lay.d - 1; ++i) sweep_step(i);
    else
        for (int i = lay.d - 1; i >= 1; --i) sweep_step(i);
    return res;
}

}  // namespace

NormalizeResult normalize_max_out(const ReducedInstance& inst, const Path& P) {
    return normalize_sweep(inst, P, true);
}

NormalizeResult normalize_max_in(const ReducedInstance& inst, const Path& P) {
    return normalize_sweep(inst, P, false);
}

RerouteSequence reroute_layer(const ReducedInstance& inst, const Path& P, int i, Vertex w) {
    const Graph& g = inst.graph;
    const Layering& lay = inst.layering;
    if (!is_shortest_st_path(g, lay, P)) throw validation_error("input is not a shortest st-path");
    if (i < 1 || i > lay.d - 1) throw validation_error("layer index out of range");
    if (w == P[i]) return {P};
    if (lay.layer_of(w) != i || !g.adjacent(P[i - 1], w))
        throw validation_error("target is not an out-neighbor of the previous path vertex");

    RerouteSequence seq{P};
    Path cur = P;
    if (i == lay.d - 1) {  // t is adjacent to all of L_{d-1}
        cur[i] = w;
        seq.push_back(cur);
        return seq;
    }

    auto h = build_layer_hypergraph(g, lay, i);
    // Shortest hypergraph path x_0..x_k from u_i to w; BFS over the
    // auxiliary graph (u ~ v iff some hyperedge contains both), exploring
    // smallest ids first.
    std::map<Vertex, std::vector<Vertex>> aux;
    for (Vertex v : h.vertices) aux[v] = {};
    for (const auto& e : h.edges)
        for (Vertex u : e.members)
            for (Vertex v : e.members)
                if (u != v) aux[u].push_back(v);
    for (auto& [v, nb] : aux) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    std::map<Vertex, Vertex> parent{{P[i], -1}};
    std::deque<Vertex> queue{P[i]};
    while (!queue.empty() && !parent.count(w)) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : aux[v])
            if (parent.try_emplace(u, v).second) queue.push_back(u);
    }
    if (!parent.count(w)) throw validation_error("target not in the hypergraph component");
    std::vector<Vertex> x{w};
    while (x.back() != P[i]) x.push_back(parent.at(x.back()));
    std::reverse(x.begin(), x.end());
    std::size_t k = x.size() - 1;

    // Witnesses a_j with maximal in-neighborhood covering {x_{j-1}, x_j};
    // a_1 = u_{i+1} when possible, otherwise smallest id.
    std::vector<Vertex> a(k + 1);
    a[0] = P[i + 1];
    for (std::size_t j = 1; j <= k; ++j) {
        Vertex pick = -1;
        for (Vertex cand : lay.layers[i + 1]) {
            auto in = in_neighbors(g, lay, cand);
            if (!contains(in, x[j - 1]) || !contains(in, x[j])) continue;
            if (!has_maximal_in_neighborhood(g, lay, cand)) continue;
            if (j == 1 && cand == P[i + 1]) {
                pick = cand;
                break;
            }
            if (pick < 0) pick = cand;
        }
        if (pick < 0) throw validation_error("no maximal in-neighborhood witness found");
        a[j] = pick;
    }

    // Detour in L_{i-1} if some x_j is not adjacent to u_{i-1}.
    Vertex y = P[i - 1];
    for (std::size_t j = 0; j <= k; ++j) {
        if (g.adjacent(P[i - 1], x[j])) continue;
        y = -1;
        for (Vertex cand : in_neighbors(g, lay, x[j]))
            if (has_maximal_out_neighborhood(g, lay, cand)) {
                y = cand;
                break;
            }
        if (y < 0) throw validation_error("no maximal out-neighborhood detour vertex found");
        break;
    }

    auto step = [&](int layer, Vertex v) {
        if (cur[layer] == v) return;
        cur[layer] = v;
        seq.push_back(cur);
    };
    step(i - 1, y);
    for (std::size_t j = 1; j <= k; ++j) {
        step(i + 1, a[j]);
        step(i, x[j]);
    }
    step(i - 1, P[i - 1]);
    return seq;
}

RerouteSequence clawfree_reroute_reduced(const ReducedInstance& inst, const Path& P,
                                         const Path& Q) {
    const Layering& lay = inst.layering;
    if (!is_shortest_st_path(inst.graph, lay, P) || !is_shortest_st_path(inst.graph, lay, Q))
        throw validation_error("input is not a shortest st-path");

    auto normP = normalize_max_in(inst, P);
    auto normQ = normalize_max_out(inst, Q);
    RerouteSequence seq = normP.steps;
    Path cur = normP.path;
    for (int i = 1; i <= lay.d - 1; ++i) {
        auto sub = reroute_layer(inst, cur, i, normQ.path[i]);
        seq.insert(seq.end(), sub.begin() + 1, sub.end());
        cur = seq.back();
    }
    if (cur != normQ.path) throw validation_error("stage rerouting did not reach the target");
    for (auto it = normQ.steps.rbegin() + 1; it != normQ.steps.rend(); ++it) seq.push_back(*it);
    return seq;
}

std::optional<RerouteSequence> clawfree_reachable(const Graph& g, const Layering& lay,
                                                  const Path& P, const Path& Q) {
    if (auto claw = find_claw(g)) throw not_claw_free(*claw);
    if (!is_shortest_st_path(g, lay, P) || !is_shortest_st_path(g, lay, Q))
        throw validation_error("input is not a shortest st-path");
    auto inst = st_reduce(g, lay, P);
    for (Vertex v : Q)
        if (!inst.kept[v]) return std::nullopt;
    return clawfree_reroute_reduced(inst, P, Q);
}

Path lexmin_shortest_path(const Graph& g, const Layering& lay) {
    Path p{lay.s};
    for (int i = 1; i <= lay.d; ++i) p.push_back(out_neighbors(g, lay, p.back()).front());
    return p;
}

bool clawfree_connected(const Graph& g, Vertex s, Vertex t) {
    if (auto claw = find_claw(g)) throw not_claw_free(*claw);
    auto lay = compute_layering(g, s, t);
    Path p = lexmin_shortest_path(g, lay);
    auto inst = st_reduce(g, lay, p);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (lay.layer_of(v) >= 0 && !inst.kept[v]) return false;
    return true;
}

}  // namespace spr
