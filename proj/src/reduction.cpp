#include "spr/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace spr {

namespace {

using Pos = VertexRole::Pos;

constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_index(int lo, int hi) {
    for (int p = 0; p < 6; ++p)
        if (kPairs[p].first == lo && kPairs[p].second == hi) return p;
    throw validation_error("invalid color pair");
}

struct Builder {
    std::vector<VertexRole> roles;

    Vertex add(const VertexRole& role) {
        roles.push_back(role);
        return static_cast<Vertex>(roles.size()) - 1;
    }

    Vertex add_main(int gadget, int color, Pos pos) {
        VertexRole r;
        r.gadget = gadget;
        r.color = color;
        r.pos = pos;
        return add(r);
    }

    Vertex add_strand(int vertex, int c1, int c2, int gadget, int color, Pos pos) {
        VertexRole r;
        r.in_strand = true;
        r.strand_vertex = vertex;
        r.pair_lo = c1;
        r.pair_hi = c2;
        r.gadget = gadget;
        r.color = color;
        r.pos = pos;
        return add(r);
    }
};

// Allocates s, the n main gadgets and t; fills the main lookup tables.
void build_main_vertices(Builder& b, int n, ReductionArtifact& art) {
    art.s = b.add(VertexRole{});  // pos == source
    art.main_s.assign(n + 1, -1);
    art.main_t.assign(n + 1, -1);
    art.main_col.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
        art.main_s[i] = b.add_main(i, 0, Pos::gadget_s);
        for (int c = 1; c <= 4; ++c) {
            art.main_col[i][c][0] = b.add_main(i, c, Pos::near_s);
            art.main_col[i][c][1] = b.add_main(i, c, Pos::middle);
            art.main_col[i][c][2] = b.add_main(i, c, Pos::near_t);
        }
        art.main_t[i] = b.add_main(i, 0, Pos::gadget_t);
    }
    VertexRole sink;
    sink.pos = Pos::sink;
    art.t = b.add(sink);
}

void add_main_edges(Graph& g, const ReductionArtifact& art, int n) {
    g.add_edge(art.s, art.main_s[1]);
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c <= 4; ++c) {
            g.add_edge(art.main_s[i], art.main_col[i][c][0]);
            g.add_edge(art.main_col[i][c][0], art.main_col[i][c][1]);
            g.add_edge(art.main_col[i][c][1], art.main_col[i][c][2]);
            g.add_edge(art.main_col[i][c][2], art.main_t[i]);
        }
        if (i < n) g.add_edge(art.main_t[i], art.main_s[i + 1]);
    }
    g.add_edge(art.main_t[n], art.t);
}

// Colors present in gadget H*_j of the (vi, {c1,c2})-strand.
std::vector<int> strand_gadget_colors(const Graph& base, int vi, int c1, int c2, int j) {
    if (j == vi) return {};
    if (base.adjacent(vi - 1, j - 1)) {
        std::vector<int> rest;
        for (int c = 1; c <= 4; ++c)
            if (c != c1 && c != c2) rest.push_back(c);
        return rest;  // {c3, c4}
    }
    return {1, 2, 3, 4};
}

}  // namespace

ReductionArtifact build_reduction(const ColorPathInstance& inst) {
    const Graph& base = inst.graph;
    int n = base.vertex_count();
    if (n < 1) throw validation_error("instance graph is empty");
    if (!is_proper_coloring(base, 4, inst.alpha) || !is_proper_coloring(base, 4, inst.beta))
        throw validation_error("input is not a proper 4-coloring");

    ReductionArtifact art;
    art.instance = inst;
    art.n = n;

    Builder b;
    build_main_vertices(b, n, art);
    for (int vi = 1; vi <= n; ++vi) {
        for (auto [c1, c2] : kPairs) {
            ReductionArtifact::Strand strand;
            strand.vertex = vi;
            strand.c1 = c1;
            strand.c2 = c2;
            strand.gs.assign(n + 1, -1);
            strand.gt.assign(n + 1, -1);
            strand.col.assign(n + 1, {});
            for (auto& g : strand.col)
                for (auto& c : g) c.fill(-1);
            for (int j = 1; j <= n; ++j) {
                strand.gs[j] = b.add_strand(vi, c1, c2, j, 0, Pos::gadget_s);
                if (j == vi) {
                    strand.ell = b.add_strand(vi, c1, c2, j, 0, Pos::ell);
                    strand.arr = b.add_strand(vi, c1, c2, j, 0, Pos::arr);
                } else {
                    for (int c : strand_gadget_colors(base, vi, c1, c2, j)) {
                        strand.col[j][c][0] = b.add_strand(vi, c1, c2, j, c, Pos::near_s);
                        strand.col[j][c][1] = b.add_strand(vi, c1, c2, j, c, Pos::middle);
                        strand.col[j][c][2] = b.add_strand(vi, c1, c2, j, c, Pos::near_t);
                    }
                }
                strand.gt[j] = b.add_strand(vi, c1, c2, j, 0, Pos::gadget_t);
            }
            art.strands.push_back(std::move(strand));
        }
    }
    art.atlas = b.roles;

    Graph g(static_cast<int>(b.roles.size()));
    add_main_edges(g, art, n);
    for (const auto& strand : art.strands) {
        int vi = strand.vertex;
        // strand chain
        g.add_edge(art.s, strand.gs[1]);
        g.add_edge(strand.gt[n], art.t);
        for (int j = 1; j < n; ++j) g.add_edge(strand.gt[j], strand.gs[j + 1]);
        for (int j = 1; j <= n; ++j) {
            if (j == vi) {
                // Four-vertex gadget: s*_i - l ... r - t*_i; l and r attach
                // to the c1/c2 middle vertices of the main gadget, s*_i and
                // t*_i to the c1/c2 near-s / near-t vertices.
                g.add_edge(strand.gs[j], strand.ell);
                g.add_edge(strand.arr, strand.gt[j]);
                for (int c : {strand.c1, strand.c2}) {
                    g.add_edge(strand.gs[j], art.main_col[j][c][0]);
                    g.add_edge(strand.ell, art.main_col[j][c][1]);
                    g.add_edge(strand.arr, art.main_col[j][c][1]);
                    g.add_edge(art.main_col[j][c][2], strand.gt[j]);
                }
                continue;
            }
            auto colors = strand_gadget_colors(base, vi, strand.c1, strand.c2, j);
            for (int c : colors) {
                g.add_edge(strand.gs[j], strand.col[j][c][0]);
                g.add_edge(strand.col[j][c][0], strand.col[j][c][1]);
                g.add_edge(strand.col[j][c][1], strand.col[j][c][2]);
                g.add_edge(strand.col[j][c][2], strand.gt[j]);
            }
            if (j < vi) {
                // Cross edges to the next layer of the main strand.
                for (int c : colors) {
                    g.add_edge(strand.gs[j], art.main_col[j][c][0]);
                    g.add_edge(strand.col[j][c][0], art.main_col[j][c][1]);
                    g.add_edge(strand.col[j][c][1], art.main_col[j][c][2]);
                    g.add_edge(strand.col[j][c][2], art.main_t[j]);
                }
                g.add_edge(strand.gt[j], art.main_s[j + 1]);
            } else {
                // Cross edges to the previous layer of the main strand.
                for (int c : colors) {
                    g.add_edge(strand.gt[j], art.main_col[j][c][2]);
                    g.add_edge(strand.col[j][c][2], art.main_col[j][c][1]);
                    g.add_edge(strand.col[j][c][1], art.main_col[j][c][0]);
                    g.add_edge(strand.col[j][c][0], art.main_s[j]);
                }
                g.add_edge(strand.gs[j], art.main_t[j - 1]);
            }
        }
    }
    art.g_prime = std::move(g);
    art.layering = compute_layering(art.g_prime, art.s, art.t);
    return art;
}

Path coloring_to_path(const ReductionArtifact& art, const Coloring& gamma) {
    if (!is_proper_coloring(art.instance.graph, 4, gamma))
        throw validation_error("input is not a proper 4-coloring");
    Path p{art.s};
    for (int i = 1; i <= art.n; ++i) {
        int c = gamma[i - 1];
        p.push_back(art.main_s[i]);
        p.push_back(art.main_col[i][c][0]);
        p.push_back(art.main_col[i][c][1]);
        p.push_back(art.main_col[i][c][2]);
        p.push_back(art.main_t[i]);
    }
    p.push_back(art.t);
    return p;
}

Coloring path_to_assignment(const ReductionArtifact& art, const Path& p) {
    Coloring out(art.n);
    for (int i = 1; i <= art.n; ++i) out[i - 1] = art.atlas[p[5 * i - 2]].color;
    return out;
}

namespace {

// Main-strand vertex in layer `layer` under coloring chi.
Vertex main_vertex_at(const ReductionArtifact& art, int layer, const Coloring& chi) {
    if (layer == 0) return art.s;
    if (layer == 5 * art.n + 1) return art.t;
    int j = (layer + 4) / 5;
    int o = layer - (5 * j - 5);
    if (o == 1) return art.main_s[j];
    if (o == 5) return art.main_t[j];
    return art.main_col[j][chi[j - 1]][o - 2];
}

// Strand vertex in layer `layer`; colored positions match chi.
Vertex strand_vertex_at(const ReductionArtifact::Strand& strand, int layer, const Coloring& chi) {
    int j = (layer + 4) / 5;
    int o = layer - (5 * j - 5);
    if (o == 1) return strand.gs[j];
    if (o == 5) return strand.gt[j];
    if (j == strand.vertex) {
        if (o == 2) return strand.ell;
        if (o == 4) return strand.arr;
        throw validation_error("no strand vertex in the middle layer of its own gadget");
    }
    return strand.col[j][chi[j - 1]][o - 2];
}

}  // namespace

RerouteSequence recoloring_to_rerouting(const ReductionArtifact& art,
                                        const std::vector<Coloring>& seq) {
    if (seq.empty()) throw validation_error("empty recoloring sequence");
    for (std::size_t m = 0; m < seq.size(); ++m)
        if (!is_proper_coloring(art.instance.graph, 4, seq[m]))
            throw validation_error("recoloring step " + std::to_string(m) +
                                   ": not a proper 4-coloring");
    if (seq.front() != art.instance.alpha || seq.back() != art.instance.beta)
        throw validation_error("recoloring sequence does not connect alpha to beta");

    RerouteSequence out{coloring_to_path(art, seq.front())};
    Path cur = out.front();
    for (std::size_t m = 0; m + 1 < seq.size(); ++m) {
        const Coloring& gamma = seq[m];
        const Coloring& delta = seq[m + 1];
        int diff = -1;
        for (int v = 0; v < art.n; ++v)
            if (gamma[v] != delta[v]) {
                if (diff >= 0)
                    throw validation_error("recoloring step " + std::to_string(m) +
                                           ": more than one vertex changed");
                diff = v;
            }
        if (diff < 0)
            throw validation_error("recoloring step " + std::to_string(m) +
                                   ": no vertex changed");
        int i = diff + 1;
        int c1 = gamma[diff], c2 = delta[diff];
        const auto& strand =
            art.strands[diff * 6 + pair_index(std::min(c1, c2), std::max(c1, c2))];

        auto step = [&](int layer, Vertex v) {
            cur[layer] = v;
            out.push_back(cur);
        };
        // Enter the strand: ascending below the middle layer, descending
        // above it; the path keeps the colors of gamma throughout.
        for (int layer = 1; layer <= 5 * i - 3; ++layer)
            step(layer, strand_vertex_at(strand, layer, gamma));
        for (int layer = 5 * art.n; layer >= 5 * i - 1; --layer)
            step(layer, strand_vertex_at(strand, layer, gamma));
        // The single middle-layer swap realizes the recoloring step.
        step(5 * i - 2, art.main_col[i][c2][1]);
        // Exit back to the main strand in reverse layer order, now reading
        // colors from delta.
        for (int layer = 5 * i - 1; layer <= 5 * art.n; ++layer)
            step(layer, main_vertex_at(art, layer, delta));
        for (int layer = 5 * i - 3; layer >= 1; --layer)
            step(layer, main_vertex_at(art, layer, delta));
    }
    return out;
}

MainStrand gen_main_strand(int n) {
    if (n < 1) throw validation_error("main strand requires n >= 1");
    ReductionArtifact art;
    art.n = n;
    Builder b;
    build_main_vertices(b, n, art);
    Graph g(static_cast<int>(b.roles.size()));
    add_main_edges(g, art, n);
    return MainStrand{std::move(g), art.s, art.t};
}

ColorPathInstance parse_color_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    ColorPathInstance inst;
    bool have_p = false, have_k = false;
    int declared_edges = 0, seen_edges = 0;
    auto read_coloring = [&](std::istringstream& ls) {
        Coloring c;
        int value;
        while (ls >> value) c.push_back(value);
        if (static_cast<int>(c.size()) != inst.graph.vertex_count())
            throw parse_error(lineno, "coloring length does not match vertex count");
        return c;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            int n = -1;
            if (!(ls >> n >> declared_edges) || n < 0 || declared_edges < 0)
                throw parse_error(lineno, "expected 'p <n> <m>'");
            inst.graph = Graph(n);
            have_p = true;
        } else if (kind == "e") {
            if (!have_p) throw parse_error(lineno, "'e' before 'p'");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, "expected 'e <u> <v>'");
            int n = inst.graph.vertex_count();
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(lineno, "vertex id out of range");
            if (u == v) throw parse_error(lineno, "self-loop");
            if (inst.graph.adjacent(u - 1, v - 1)) throw parse_error(lineno, "duplicate edge");
            inst.graph.add_edge(u - 1, v - 1);
            ++seen_edges;
        } else if (kind == "k") {
            if (!(ls >> inst.k) || inst.k != 4)
                throw parse_error(lineno, "only k = 4 is supported");
            have_k = true;
        } else if (kind == "alpha") {
            if (!have_p) throw parse_error(lineno, "'alpha' before 'p'");
            inst.alpha = read_coloring(ls);
        } else if (kind == "beta") {
            if (!have_p) throw parse_error(lineno, "'beta' before 'p'");
            inst.beta = read_coloring(ls);
        } else {
            throw parse_error(lineno, "unknown directive '" + kind + "'");
        }
    }
    if (!have_p || !have_k || inst.alpha.empty() || inst.beta.empty())
        throw parse_error(lineno, "missing directive (need p, k, alpha, beta)");
    if (seen_edges != declared_edges) throw parse_error(lineno, "edge count mismatch");
    if (!is_proper_coloring(inst.graph, 4, inst.alpha) ||
        !is_proper_coloring(inst.graph, 4, inst.beta))
        throw validation_error("alpha/beta is not a proper 4-coloring");
    return inst;
}

std::string serialize_color_instance(const ColorPathInstance& inst) {
    std::ostringstream out;
    out << "p " << inst.graph.vertex_count() << " " << inst.graph.edge_count() << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    out << "k " << inst.k << "\n";
    out << "alpha";
    for (int c : inst.alpha) out << " " << c;
    out << "\nbeta";
    for (int c : inst.beta) out << " " << c;
    out << "\n";
    return out.str();
}

std::string atlas_to_text(const ReductionArtifact& art) {
    auto pos_name = [](Pos p) {
        switch (p) {
            case Pos::source: return "s";
            case Pos::sink: return "t";
            case Pos::gadget_s: return "gadget-s";
            case Pos::gadget_t: return "gadget-t";
            case Pos::near_s: return "near-s";
            case Pos::middle: return "middle";
            case Pos::near_t: return "near-t";
            case Pos::ell: return "l";
            case Pos::arr: return "r";
        }
        return "?";
    };
    std::ostringstream out;
    for (std::size_t v = 0; v < art.atlas.size(); ++v) {
        const auto& r = art.atlas[v];
        out << v + 1 << " ";
        if (r.pos == Pos::source || r.pos == Pos::sink) {
            out << pos_name(r.pos) << "\n";
            continue;
        }
        out << (r.in_strand ? "strand" : "main");
        if (r.in_strand)
            out << " vertex=" << r.strand_vertex << " pair=" << r.pair_lo << "," << r.pair_hi;
        out << " gadget=" << r.gadget << " pos=" << pos_name(r.pos);
        out << " color=" << (r.color == 0 ? std::string("black") : std::to_string(r.color));
        out << "\n";
    }
    return out.str();
}

}  // namespace spr
