#include "spr/chordal.hpp"

namespace spr {

RerouteSequence chordal_reroute(const Graph& g, const Layering& lay, const Path& P,
                                const Path& Q) {
    if (!is_shortest_st_path(g, lay, P) || !is_shortest_st_path(g, lay, Q))
        throw validation_error("input is not a shortest st-path");

    // Two half-sequences: forward from P and forward from Q, joined at a
    // common path by reversing the Q side. Each step fixes the lowest
    // disagreeing layer of one side, so the total length is |V(P) \ V(Q)|.
    RerouteSequence fwd{P}, bwd{Q};
    Path a = P, b = Q;
    while (a != b) {
        int i = 0;
        while (a[i] == b[i]) ++i;
        int j = i + 1;
        while (a[j] != b[j]) ++j;
        if (j == i + 1 || g.adjacent(a[i + 1], b[i])) {
            a[i] = b[i];
            fwd.push_back(a);
        } else if (g.adjacent(a[i], b[i + 1])) {
            b[i] = a[i];
            bwd.push_back(b);
        } else {
            // Chordless witness cycle a[i-1], a[i], ..., a[j] (= b[j]),
            // b[j-1], ..., b[i], closing back at a[i-1] = b[i-1].
            std::vector<Vertex> cycle(a.begin() + (i - 1), a.begin() + (j + 1));
            for (int p = j - 1; p >= i; --p) cycle.push_back(b[p]);
            throw non_chordal_witness(std::move(cycle));
        }
    }
    for (auto it = bwd.rbegin() + 1; it != bwd.rend(); ++it) fwd.push_back(*it);
    return fwd;
}

}  // namespace spr
