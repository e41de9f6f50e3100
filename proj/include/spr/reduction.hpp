#pragma once

#include <array>
#include <string>

#include "spr/layering.hpp"
#include "spr/oracle.hpp"

namespace spr {

/// A 4-Color-Path instance: graph plus two proper 4-colorings.
struct ColorPathInstance {
    Graph graph;
    int k = 4;
    Coloring alpha, beta;
};

// Coloring-instance file: '#' comments, "p <n> <m>", m lines "e <u> <v>",
// "k 4", "alpha <c1> ... <cn>", "beta <c1> ... <cn>".
ColorPathInstance parse_color_instance(const std::string& text);
std::string serialize_color_instance(const ColorPathInstance& inst);

/// Role of one vertex of the constructed graph.
struct VertexRole {
    enum class Pos { source, sink, gadget_s, gadget_t, near_s, middle, near_t, ell, arr };
    bool in_strand = false;
    int strand_vertex = 0;  // 1-based v_i, strands only
    int pair_lo = 0, pair_hi = 0;  // strand color pair {c1,c2}, strands only
    int gadget = 0;         // 1-based gadget index (0 for source/sink)
    int color = 0;          // 1..4, or 0 for black
    Pos pos = Pos::source;
};

/// The constructed SPR instance: one main strand of n vertex gadgets plus
/// 6n recoloring strands, one per (vertex, color-pair) combination.
struct ReductionArtifact {
    Graph g_prime;
    Vertex s = 0, t = 0;
    Layering layering;
    std::vector<VertexRole> atlas;
    ColorPathInstance instance;
    int n = 0;

    // id lookups
    std::vector<Vertex> main_s, main_t;                       // [gadget 1..n]
    std::vector<std::array<std::array<Vertex, 3>, 5>> main_col;  // [gadget][color][pos 0..2]
    struct Strand {
        int vertex;         // 1-based v_i
        int c1, c2;         // c1 < c2
        std::vector<Vertex> gs, gt;                           // s*_j, t*_j
        std::vector<std::array<std::array<Vertex, 3>, 5>> col;   // -1 where absent
        Vertex ell = -1, arr = -1;
    };
    std::vector<Strand> strands;  // ordered by (vertex, pair)

    Vertex main_colored(int gadget, int color, int pos) const {
        return main_col[gadget][color][pos];
    }
};

/// Builds G' per the 4-Color-Path reduction. Throws validation_error on
/// improper input colorings.
ReductionArtifact build_reduction(const ColorPathInstance& inst);

/// Main-strand path selecting the color-gamma(v_i) vertices of each gadget.
Path coloring_to_path(const ReductionArtifact& art, const Coloring& gamma);

/// Color assignment read off the path's middle-layer vertices; total, but
/// not necessarily proper.
Coloring path_to_assignment(const ReductionArtifact& art, const Path& p);

/// Expands a recoloring sequence into a rerouting sequence from P_alpha to
/// P_beta: each recoloring step detours through its (v_i, {c1,c2})-strand.
RerouteSequence recoloring_to_rerouting(const ReductionArtifact& art,
                                        const std::vector<Coloring>& seq);

/// Main strand alone: 14n + 2 vertices, s = 0, t = last.
struct MainStrand {
    Graph graph;
    Vertex s = 0, t = 0;
};
MainStrand gen_main_strand(int n);

/// Sidecar atlas text: one line per vertex, "<id> <role...>", 1-based ids.
std::string atlas_to_text(const ReductionArtifact& art);

}  // namespace spr
