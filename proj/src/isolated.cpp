#include "spr/isolated.hpp"

#include <algorithm>
#include <map>

namespace spr {

namespace {

// Keyed (z, y): number of isolated sz-paths whose second-to-last vertex is y.
using IsoTable = std::map<std::pair<Vertex, Vertex>, BigInt>;

// N(x) ∩ N(z) == {y}, intersected over the whole graph.
bool unique_common_neighbor(const Graph& g, Vertex x, Vertex z, Vertex y) {
    const auto& nx = g.neighbors(x);
    const auto& nz = g.neighbors(z);
    std::size_t a = 0, b = 0;
    bool saw_y = false;
    while (a < nx.size() && b < nz.size()) {
        if (nx[a] < nz[b])
            ++a;
        else if (nz[b] < nx[a])
            ++b;
        else {
            if (nx[a] != y) return false;
            saw_y = true;
            ++a;
            ++b;
        }
    }
    return saw_y;
}

// Entries for one vertex z in L_i, from the previous layer's table.
//
// x, y, z range over layer sets only: for z in L_i, every shortest sz-path
// is fully layered (each vertex v at position j on such a path has
// dist_s(v) = j and dist_t(v) <= (i - j) + dist_t(z) = d - j, hence
// dist_s(v) + dist_t(v) = d). The single-common-neighbor test itself runs
// over the whole graph.
std::vector<std::pair<Vertex, BigInt>> entries_for(const Graph& g, const Layering& lay, int i,
                                                   Vertex z, const IsoTable& prev) {
    std::vector<std::pair<Vertex, BigInt>> out;
    for (Vertex y : in_neighbors(g, lay, z)) {
        BigInt total = 0;
        for (Vertex x : in_neighbors(g, lay, y))
            if (unique_common_neighbor(g, x, z, y)) {
                auto it = prev.find({y, x});
                if (it != prev.end()) total += it->second;
            }
        out.emplace_back(y, std::move(total));
    }
    return out;
}

BigInt run_dp(const Graph& g, const Layering& lay, bool parallel) {
    IsoTable prev;
    for (Vertex z : lay.layers[1]) prev[{z, lay.s}] = 1;
    for (int i = 2; i <= lay.d; ++i) {
        const auto& layer = lay.layers[i];
        std::vector<std::vector<std::pair<Vertex, BigInt>>> rows(layer.size());
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int zi = 0; zi < static_cast<int>(layer.size()); ++zi)
                rows[zi] = entries_for(g, lay, i, layer[zi], prev);
        } else {
            for (int zi = 0; zi < static_cast<int>(layer.size()); ++zi)
                rows[zi] = entries_for(g, lay, i, layer[zi], prev);
        }
        IsoTable cur;
        for (std::size_t zi = 0; zi < layer.size(); ++zi)
            for (auto& [y, value] : rows[zi]) cur[{layer[zi], y}] = std::move(value);
        prev = std::move(cur);
    }
    BigInt answer = 0;
    for (const auto& [key, value] : prev) answer += value;
    return answer;
}

}  // namespace

BigInt count_isolated(const Graph& g, const Layering& lay) { return run_dp(g, lay, true); }

BigInt count_isolated_serial(const Graph& g, const Layering& lay) { return run_dp(g, lay, false); }

}  // namespace spr
