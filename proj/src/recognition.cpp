#include "spr/recognition.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spr {

namespace {

// Smallest claw centered at c, in leaf-triple lexicographic order.
std::optional<Claw> claw_at(const Graph& g, Vertex c) {
    const auto& nb = g.neighbors(c);
    int deg = static_cast<int>(nb.size());
    for (int a = 0; a < deg; ++a)
        for (int b = a + 1; b < deg; ++b) {
            if (g.adjacent(nb[a], nb[b])) continue;
            for (int e = b + 1; e < deg; ++e) {
                if (g.adjacent(nb[a], nb[e]) || g.adjacent(nb[b], nb[e])) continue;
                return Claw{c, nb[a], nb[b], nb[e]};
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<Claw> find_claw_serial(const Graph& g) {
    for (Vertex c = 0; c < g.vertex_count(); ++c)
        if (auto claw = claw_at(g, c)) return claw;
    return std::nullopt;
}

std::optional<Claw> find_claw(const Graph& g) {
#ifdef _OPENMP
    int n = g.vertex_count();
    int best = n;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (Vertex c = 0; c < n; ++c) {
        if (c >= best) continue;
        if (claw_at(g, c)) best = std::min(best, c);
    }
    if (best == n) return std::nullopt;
    return claw_at(g, best);
#else
    return find_claw_serial(g);
#endif
}

bool verify_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) return false;
        pos[order[i]] = i;
    }
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) later.push_back(w);
        if (later.empty()) continue;
        // It suffices that the earliest later neighbor sees all the others.
        Vertex u = *std::min_element(later.begin(), later.end(),
                                     [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
        for (Vertex w : later)
            if (w != u && !g.adjacent(u, w)) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> chordality_check(const Graph& g) {
    int n = g.vertex_count();
    // Maximum cardinality search; reversed visit order is a perfect
    // elimination ordering iff g is chordal.
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
        numbered[pick] = 1;
        visit.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (!numbered[w]) ++weight[w];
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());
    if (!verify_elimination_ordering(g, order)) return std::nullopt;
    return order;
}

}  // namespace spr
