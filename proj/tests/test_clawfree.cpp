#include <doctest.h>

#include "fixtures.hpp"
#include "spr/clawfree.hpp"
#include "spr/generators.hpp"
#include "spr/oracle.hpp"

using namespace spr;
using namespace fixtures;

namespace {

// Enumerable line-graph instances with at least one shortest-path pair.
struct Enumerated {
    Graph g;
    Layering lay;
    std::vector<Path> paths;
    SolutionGraph sg;
};

std::vector<Enumerated> line_graph_instances(int count, int base_n, double p) {
    std::vector<Enumerated> out;
    for (std::uint64_t seed = 0; static_cast<int>(out.size()) < count && seed < 500; ++seed) {
        auto g = line_graph(gen_random_graph(base_n, p, seed));
        std::pair<Vertex, Vertex> st;
        try {
            st = max_distance_pair(g);
        } catch (const validation_error&) {
            continue;
        }
        if (st.first == st.second) continue;
        auto lay = compute_layering(g, st.first, st.second);
        if (lay.d < 2) continue;
        auto paths = enumerate_shortest_paths(g, lay);
        auto sg = build_solution_graph(paths);
        out.push_back({std::move(g), std::move(lay), std::move(paths), std::move(sg)});
    }
    return out;
}

}  // namespace

TEST_CASE("build_layer_hypergraph") {
    SUBCASE("DIAMOND layer 1: one hyperedge, one component") {
        auto [g, s, t] = diamond();
        auto lay = compute_layering(g, s, t);
        auto h = build_layer_hypergraph(g, lay, 1);
        CHECK(h.vertices == std::vector<Vertex>{1, 2});
        REQUIRE(h.edges.size() == 1);
        CHECK(h.edges[0].members == std::vector<Vertex>{1, 2});
        CHECK(h.edges[0].witness == 3);
        CHECK(h.component_count == 1);
        CHECK(h.component_of(1) == h.component_of(2));
    }
    SUBCASE("C6 layer 1: two singleton hyperedges, two components") {
        auto [g, s, t] = c6();
        auto lay = compute_layering(g, s, t);
        auto h = build_layer_hypergraph(g, lay, 1);
        REQUIRE(h.edges.size() == 2);
        CHECK(h.edges[0].members == std::vector<Vertex>{1});
        CHECK(h.edges[1].members == std::vector<Vertex>{5});
        CHECK(h.component_count == 2);
        CHECK(h.component_of(1) != h.component_of(5));
    }
    SUBCASE("C6 layer 2 feeds the singleton {t}: one spanning hyperedge") {
        auto [g, s, t] = c6();
        auto lay = compute_layering(g, s, t);
        auto h = build_layer_hypergraph(g, lay, 2);
        REQUIRE(h.edges.size() == 1);
        CHECK(h.edges[0].members == std::vector<Vertex>{2, 4});
        CHECK(h.edges[0].witness == 3);
        CHECK(h.component_count == 1);
    }
}

TEST_CASE("st_reduce") {
    SUBCASE("C6: the other half is deleted") {
        auto [g, s, t] = c6();
        auto lay = compute_layering(g, s, t);
        auto inst = st_reduce(g, lay, {0, 1, 2, 3});
        CHECK(inst.kept_count() == 4);
        CHECK(inst.kept[1]);
        CHECK(inst.kept[2]);
        CHECK_FALSE(inst.kept[4]);
        CHECK_FALSE(inst.kept[5]);
        CHECK(inst.layering.d == 3);
        CHECK(inst.base_path == Path{0, 1, 2, 3});
    }
    SUBCASE("DIAMOND: already reduced, identity") {
        auto [g, s, t] = diamond();
        auto lay = compute_layering(g, s, t);
        auto inst = st_reduce(g, lay, {0, 1, 3});
        CHECK(inst.kept_count() == 4);
        CHECK(inst.graph == g);
    }
    SUBCASE("idempotent") {
        auto instances = line_graph_instances(10, 7, 0.5);
        for (const auto& e : instances) {
            for (const auto& p : e.paths) {
                auto r1 = st_reduce(e.g, e.lay, p);
                auto r2 = st_reduce(r1.graph, r1.layering, p);
                CHECK(r1.kept == r2.kept);
            }
        }
    }
    SUBCASE("claw input rejected with witness") {
        auto star = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}});
        auto lay = compute_layering(star, 0, 3);
        CHECK_THROWS_AS(st_reduce(star, lay, {0, 1, 3}), not_claw_free);
    }
}

TEST_CASE("normalization sweeps") {
    SUBCASE("C6 reduced: singleton layers, zero steps") {
        auto [g, s, t] = c6();
        auto lay = compute_layering(g, s, t);
        auto inst = st_reduce(g, lay, {0, 1, 2, 3});
        auto out = normalize_max_out(inst, {0, 1, 2, 3});
        CHECK(out.path == Path{0, 1, 2, 3});
        CHECK(out.steps.size() == 1);  // just the input
        auto in = normalize_max_in(inst, {0, 1, 2, 3});
        CHECK(in.path == Path{0, 1, 2, 3});
    }
    SUBCASE("postconditions on enumerable instances") {
        auto instances = line_graph_instances(15, 8, 0.45);
        for (const auto& e : instances) {
            for (const auto& p : e.paths) {
                auto inst = st_reduce(e.g, e.lay, p);
                auto out = normalize_max_out(inst, p);
                CHECK_FALSE(validate_reroute_sequence(inst.graph, inst.layering, out.steps));
                CHECK(out.steps.front() == p);
                CHECK(out.steps.back() == out.path);
                CHECK(out.steps.size() <= static_cast<std::size_t>(inst.layering.d));
                for (int i = 1; i < inst.layering.d; ++i)
                    CHECK(has_maximal_out_neighborhood(inst.graph, inst.layering, out.path[i]));
                auto in = normalize_max_in(inst, p);
                CHECK_FALSE(validate_reroute_sequence(inst.graph, inst.layering, in.steps));
                for (int i = 1; i < inst.layering.d; ++i)
                    CHECK(has_maximal_in_neighborhood(inst.graph, inst.layering, in.path[i]));
            }
        }
    }
}

TEST_CASE("reroute_layer") {
    SUBCASE("DIAMOND: one step") {
        auto [g, s, t] = diamond();
        auto lay = compute_layering(g, s, t);
        auto inst = st_reduce(g, lay, {0, 1, 3});
        auto steps = reroute_layer(inst, {0, 1, 3}, 1, 2);
        CHECK(steps == RerouteSequence{{0, 1, 3}, {0, 2, 3}});
    }
    SUBCASE("w equals the current vertex: no movement") {
        auto [g, s, t] = diamond();
        auto lay = compute_layering(g, s, t);
        auto inst = st_reduce(g, lay, {0, 1, 3});
        auto steps = reroute_layer(inst, {0, 1, 3}, 1, 1);
        CHECK(steps == RerouteSequence{{0, 1, 3}});
    }
    SUBCASE("step bound 2|L_i| on enumerable instances") {
        auto instances = line_graph_instances(15, 8, 0.45);
        for (const auto& e : instances) {
            for (const auto& p : e.paths) {
                auto inst = st_reduce(e.g, e.lay, p);
                auto norm = normalize_max_in(inst, p);
                for (int i = 1; i < inst.layering.d; ++i) {
                    for (Vertex w : out_neighbors(inst.graph, inst.layering, norm.path[i - 1])) {
                        auto steps = reroute_layer(inst, norm.path, i, w);
                        CHECK_FALSE(
                            validate_reroute_sequence(inst.graph, inst.layering, steps));
                        CHECK(steps.back()[i] == w);
                        CHECK(steps.size() <=
                              1 + 2 * inst.layering.layers[i].size());
                    }
                }
            }
        }
    }
}

TEST_CASE("clawfree_reachable agrees with the oracle") {
    auto instances = line_graph_instances(25, 8, 0.45);
    REQUIRE(instances.size() == 25);
    for (const auto& e : instances) {
        for (std::size_t a = 0; a < e.paths.size(); ++a)
            for (std::size_t b = 0; b < e.paths.size(); ++b) {
                auto seq = clawfree_reachable(e.g, e.lay, e.paths[a], e.paths[b]);
                bool oracle = oracle_reachable(e.sg, e.paths[a], e.paths[b]).has_value();
                CHECK(seq.has_value() == oracle);
                if (seq) {
                    CHECK(seq->front() == e.paths[a]);
                    CHECK(seq->back() == e.paths[b]);
                    CHECK_FALSE(validate_reroute_sequence(e.g, e.lay, *seq));
                }
            }
    }
}

TEST_CASE("clawfree_reroute_reduced length bound") {
    auto instances = line_graph_instances(15, 8, 0.45);
    for (const auto& e : instances) {
        for (std::size_t a = 0; a < e.paths.size(); ++a) {
            auto inst = st_reduce(e.g, e.lay, e.paths[a]);
            for (std::size_t b = 0; b < e.paths.size(); ++b) {
                bool kept = true;
                for (Vertex v : e.paths[b]) kept = kept && inst.kept[v];
                if (!kept) continue;
                auto seq = clawfree_reroute_reduced(inst, e.paths[a], e.paths[b]);
                CHECK_FALSE(validate_reroute_sequence(inst.graph, inst.layering, seq));
                CHECK(seq.front() == e.paths[a]);
                CHECK(seq.back() == e.paths[b]);
                int bound = 2 * inst.kept_count() + 2 * inst.layering.d - 6;
                CHECK(static_cast<int>(seq.size()) - 1 <= std::max(bound, 1));
            }
        }
    }
}

TEST_CASE("clawfree_connected") {
    CHECK(clawfree_connected(diamond().graph, 0, 3));
    CHECK_FALSE(clawfree_connected(c6().graph, 0, 3));
    CHECK(clawfree_connected(k2().graph, 0, 1));
    auto instances = line_graph_instances(25, 8, 0.45);
    for (const auto& e : instances)
        CHECK(clawfree_connected(e.g, e.lay.s, e.lay.t) == oracle_connected(e.sg));
}

TEST_CASE("claw inputs are rejected up front") {
    auto star = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}});
    auto lay = compute_layering(star, 0, 3);
    CHECK_THROWS_AS(clawfree_reachable(star, lay, {0, 1, 3}, {0, 1, 3}), not_claw_free);
    CHECK_THROWS_AS(clawfree_connected(star, 0, 3), not_claw_free);
}

TEST_CASE("lexmin_shortest_path") {
    auto [g, s, t] = diamond();
    auto lay = compute_layering(g, s, t);
    CHECK(lexmin_shortest_path(g, lay) == Path{0, 1, 3});
}
