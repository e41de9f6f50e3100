// Command-line front end: shortest-path rerouting, solution-graph
// connectivity, isolated-path counting, instance generation, and the
// 4-Color-Path reduction.
//
// Exit codes: 0 = yes/success, 1 = no/unreachable, 2 = error.

#include <CLI11.hpp>
#include <algorithm>
#include <deque>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spr/chordal.hpp"
#include "spr/clawfree.hpp"
#include "spr/generators.hpp"
#include "spr/isolated.hpp"
#include "spr/oracle.hpp"
#include "spr/recognition.hpp"
#include "spr/reduction.hpp"

namespace {

using namespace spr;

std::string read_file(const std::string& name) {
    std::ifstream in(name);
    if (!in) throw std::runtime_error("cannot open " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& name, const std::string& content) {
    std::ofstream out(name);
    if (!out) throw std::runtime_error("cannot write " + name);
    out << content;
}

// Path files: one or more lines "path <v0> <v1> ... <vd>", 1-based ids.
RerouteSequence parse_paths(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    RerouteSequence seq;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind != "path") throw parse_error(lineno, "expected 'path <v...>'");
        Path p;
        int v;
        while (ls >> v) p.push_back(v - 1);
        if (p.empty()) throw parse_error(lineno, "empty path");
        seq.push_back(std::move(p));
    }
    if (seq.empty()) throw parse_error(lineno, "no path lines");
    return seq;
}

Path parse_single_path(const std::string& text) {
    auto seq = parse_paths(text);
    if (seq.size() != 1) throw validation_error("expected a single path line");
    return seq.front();
}

void print_path(std::ostream& out, const Path& p) {
    out << "path";
    for (Vertex v : p) out << " " << v + 1;
    out << "\n";
}

void print_sequence(const RerouteSequence& seq) {
    for (const auto& p : seq) print_path(std::cout, p);
}

std::string path_line(const Path& p) {
    std::ostringstream out;
    print_path(out, p);
    return out.str();
}

// Sequence reconstruction over the brute-force solution graph.
std::optional<RerouteSequence> oracle_sequence(const SolutionGraph& sg, const Path& P,
                                               const Path& Q) {
    int from = -1, to = -1;
    for (int i = 0; i < static_cast<int>(sg.paths.size()); ++i) {
        if (sg.paths[i] == P) from = i;
        if (sg.paths[i] == Q) to = i;
    }
    if (from < 0 || to < 0) throw validation_error("path is not a solution");
    std::vector<int> pred(sg.paths.size(), -2);
    std::deque<int> queue{from};
    pred[from] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int w : sg.adj[v])
            if (pred[w] == -2) {
                pred[w] = v;
                queue.push_back(w);
            }
    }
    if (pred[to] == -2) return std::nullopt;
    RerouteSequence seq;
    for (int v = to; v != -1; v = pred[v]) seq.push_back(sg.paths[v]);
    std::reverse(seq.begin(), seq.end());
    return seq;
}

int cmd_reach(const std::string& graph_file, const std::string& p_file, const std::string& q_file,
              std::string algo, std::size_t cap) {
    auto parsed = parse_graph(read_file(graph_file));
    auto lay = compute_layering(parsed.graph, parsed.s, parsed.t);
    Path P = parse_single_path(read_file(p_file));
    Path Q = parse_single_path(read_file(q_file));
    if (!is_shortest_st_path(parsed.graph, lay, P) || !is_shortest_st_path(parsed.graph, lay, Q))
        throw validation_error("input is not a shortest st-path");

    if (algo == "auto") {
        if (chordality_check(parsed.graph))
            algo = "chordal";
        else if (!find_claw(parsed.graph))
            algo = "clawfree";
        else
            algo = "oracle";
        std::cerr << "auto: using " << algo << " algorithm\n";
    }
    std::optional<RerouteSequence> seq;
    if (algo == "chordal") {
        seq = chordal_reroute(parsed.graph, lay, P, Q);
    } else if (algo == "clawfree") {
        seq = clawfree_reachable(parsed.graph, lay, P, Q);
    } else {
        auto paths = enumerate_shortest_paths(parsed.graph, lay, cap);
        seq = oracle_sequence(build_solution_graph(paths), P, Q);
    }
    if (!seq) {
        std::cout << "UNREACHABLE\n";
        return 1;
    }
    print_sequence(*seq);
    return 0;
}

int cmd_connected(const std::string& graph_file, std::string algo, std::size_t cap) {
    auto parsed = parse_graph(read_file(graph_file));
    auto lay = compute_layering(parsed.graph, parsed.s, parsed.t);
    if (algo == "auto") {
        if (chordality_check(parsed.graph))
            algo = "chordal";
        else if (!find_claw(parsed.graph))
            algo = "clawfree";
        else
            algo = "oracle";
        std::cerr << "auto: using " << algo << " algorithm\n";
    }
    bool connected;
    if (algo == "chordal") {
        if (!chordality_check(parsed.graph)) throw validation_error("graph is not chordal");
        connected = true;  // rerouting always succeeds on chordal graphs
    } else if (algo == "clawfree") {
        connected = clawfree_connected(parsed.graph, parsed.s, parsed.t);
    } else {
        auto paths = enumerate_shortest_paths(parsed.graph, lay, cap);
        connected = oracle_connected(build_solution_graph(paths));
    }
    std::cout << (connected ? "YES" : "NO") << "\n";
    return connected ? 0 : 1;
}

int cmd_count_isolated(const std::string& graph_file) {
    auto parsed = parse_graph(read_file(graph_file));
    auto lay = compute_layering(parsed.graph, parsed.s, parsed.t);
    std::cout << count_isolated(parsed.graph, lay) << "\n";
    return 0;
}

int cmd_validate(const std::string& graph_file, const std::string& seq_file) {
    auto parsed = parse_graph(read_file(graph_file));
    auto lay = compute_layering(parsed.graph, parsed.s, parsed.t);
    auto seq = parse_paths(read_file(seq_file));
    if (auto violation = validate_reroute_sequence(parsed.graph, lay, seq)) {
        std::cout << "VIOLATION at index " << violation->index << ": " << violation->reason
                  << "\n";
        return 1;
    }
    std::cout << "OK\n";
    return 0;
}

int cmd_layers(const std::string& graph_file) {
    auto parsed = parse_graph(read_file(graph_file));
    auto lay = compute_layering(parsed.graph, parsed.s, parsed.t);
    for (int i = 0; i <= lay.d; ++i) {
        std::cout << "L" << i << ":";
        for (Vertex v : lay.layers[i]) std::cout << " " << v + 1;
        std::cout << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& inst_file, const std::string& prefix) {
    auto inst = parse_color_instance(read_file(inst_file));
    auto art = build_reduction(inst);
    write_file(prefix + ".graph", serialize_graph(art.g_prime, art.s, art.t));
    write_file(prefix + ".atlas", atlas_to_text(art));
    write_file(prefix + ".alpha.path", path_line(coloring_to_path(art, inst.alpha)));
    write_file(prefix + ".beta.path", path_line(coloring_to_path(art, inst.beta)));
    std::cerr << "wrote " << prefix << ".{graph,atlas,alpha.path,beta.path}\n";
    return 0;
}

void emit_graph(const Graph& g, Vertex s, Vertex t, const std::string& out_file) {
    auto text = serialize_graph(g, s, t);
    if (out_file.empty())
        std::cout << text;
    else
        write_file(out_file, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shortest-path rerouting toolkit"};
    app.require_subcommand(1);

    std::string graph_file, p_file, q_file, seq_file, inst_file, prefix, out_file;
    std::string algo = "auto";
    std::size_t cap = kDefaultCap;
    std::uint64_t seed = 1;

    auto* reach = app.add_subcommand("reach", "rerouting sequence between two shortest st-paths");
    reach->add_option("graph", graph_file)->required();
    reach->add_option("P", p_file)->required();
    reach->add_option("Q", q_file)->required();
    reach->add_option("--algo", algo)->check(CLI::IsMember({"auto", "chordal", "clawfree", "oracle"}));
    reach->add_option("--cap", cap);

    auto* connected = app.add_subcommand("connected", "is the solution graph connected?");
    connected->add_option("graph", graph_file)->required();
    connected->add_option("--algo", algo)->check(CLI::IsMember({"auto", "chordal", "clawfree", "oracle"}));
    connected->add_option("--cap", cap);

    auto* count = app.add_subcommand("count-isolated", "number of isolated shortest st-paths");
    count->add_option("graph", graph_file)->required();

    auto* validate = app.add_subcommand("validate", "check a rerouting sequence file");
    validate->add_option("graph", graph_file)->required();
    validate->add_option("sequence", seq_file)->required();

    auto* layers = app.add_subcommand("layers", "print the BFS layers");
    layers->add_option("graph", graph_file)->required();

    auto* reduce = app.add_subcommand("reduce", "build the 4-Color-Path reduction instance");
    reduce->add_option("instance", inst_file)->required();
    reduce->add_option("--out", prefix)->required();

    auto* gen = app.add_subcommand("gen", "generate instance graph files");
    gen->fallthrough();
    int gen_n = 0, gen_k = 2;
    double gen_p = 0.5;
    auto* gen_main = gen->add_subcommand("main-strand", "reduction main strand");
    gen_main->add_option("n", gen_n)->required();
    auto* gen_ktree_cmd = gen->add_subcommand("ktree", "random k-tree (chordal)");
    gen_ktree_cmd->add_option("n", gen_n)->required();
    gen_ktree_cmd->add_option("k", gen_k)->required();
    auto* gen_line = gen->add_subcommand("linegraph", "line graph of a random graph (claw-free)");
    gen_line->add_option("n", gen_n)->required();
    gen_line->add_option("p", gen_p)->required();
    auto* gen_cycle_cmd = gen->add_subcommand("cycle", "cycle C_n");
    gen_cycle_cmd->add_option("n", gen_n)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_file);
    gen->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reach) return cmd_reach(graph_file, p_file, q_file, algo, cap);
        if (*connected) return cmd_connected(graph_file, algo, cap);
        if (*count) return cmd_count_isolated(graph_file);
        if (*validate) return cmd_validate(graph_file, seq_file);
        if (*layers) return cmd_layers(graph_file);
        if (*reduce) return cmd_reduce(inst_file, prefix);
        if (*gen) {
            if (*gen_main) {
                auto strand = gen_main_strand(gen_n);
                emit_graph(strand.graph, strand.s, strand.t, out_file);
            } else if (*gen_ktree_cmd) {
                auto g = gen_ktree(gen_n, gen_k, seed);
                auto [s, t] = max_distance_pair(g);
                emit_graph(g, s, t, out_file);
            } else if (*gen_line) {
                auto g = line_graph(gen_random_graph(gen_n, gen_p, seed));
                auto [s, t] = max_distance_pair(g);
                emit_graph(g, s, t, out_file);
            } else if (*gen_cycle_cmd) {
                auto g = gen_cycle(gen_n);
                auto [s, t] = max_distance_pair(g);
                emit_graph(g, s, t, out_file);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
