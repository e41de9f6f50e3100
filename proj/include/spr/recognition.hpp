#pragma once

#include <optional>
#include <vector>

#include "spr/graph.hpp"

namespace spr {

/// An induced K_{1,3} witness: leaves pairwise nonadjacent, all adjacent to
/// the center.
struct Claw {
    Vertex center, l1, l2, l3;
    bool operator==(const Claw&) const = default;
};

struct not_claw_free : validation_error {
    Claw witness;
    explicit not_claw_free(const Claw& w)
        : validation_error("graph is not claw-free (center " + std::to_string(w.center + 1) + ")"),
          witness(w) {}
};

/// Smallest claw in (center, l1, l2, l3) lexicographic order, or nullopt.
/// Scans all neighbor triples per center; OpenMP-parallel over centers.
std::optional<Claw> find_claw(const Graph& g);
/// Serial reference for find_claw; identical result.
std::optional<Claw> find_claw_serial(const Graph& g);

/// Perfect elimination ordering if g is chordal (each vertex's later
/// neighbors form a clique), else nullopt. Maximum cardinality search plus
/// verification of the produced ordering.
std::optional<std::vector<Vertex>> chordality_check(const Graph& g);

/// True iff `order` is a perfect elimination ordering of g.
bool verify_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

}  // namespace spr
