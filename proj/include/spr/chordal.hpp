#pragma once

#include "spr/layering.hpp"

namespace spr {

struct non_chordal_witness : validation_error {
    std::vector<Vertex> cycle;  // chordless cycle certifying the failure
    explicit non_chordal_witness(std::vector<Vertex> c)
        : validation_error("no chord available: graph is not chordal"), cycle(std::move(c)) {}
};

/// Rerouting sequence from P to Q of length exactly |V(P) \ V(Q)|, which is
/// optimal. Intended for chordal graphs; chordality is not re-verified, a
/// non-chordal input either succeeds anyway or raises non_chordal_witness
/// carrying a long induced cycle.
RerouteSequence chordal_reroute(const Graph& g, const Layering& lay, const Path& P, const Path& Q);

}  // namespace spr
