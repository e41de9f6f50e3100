#include <doctest.h>

#include "fixtures.hpp"
#include "spr/generators.hpp"
#include "spr/isolated.hpp"
#include "spr/oracle.hpp"
#include "spr/recognition.hpp"

using namespace spr;
using namespace fixtures;

TEST_CASE("find_claw parallel matches serial exactly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen_random_graph(20, 0.25, seed);
        CHECK(find_claw(g) == find_claw_serial(g));
    }
    auto lg = line_graph(gen_random_graph(20, 0.4, 99));
    CHECK(find_claw(lg) == find_claw_serial(lg));
}

TEST_CASE("build_solution_graph parallel matches serial exactly") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_graph(12, 0.35, seed);
        std::pair<Vertex, Vertex> st;
        try {
            st = max_distance_pair(g);
        } catch (const validation_error&) {
            continue;
        }
        if (st.first == st.second) continue;
        auto lay = compute_layering(g, st.first, st.second);
        auto paths = enumerate_shortest_paths(g, lay);
        auto a = build_solution_graph_serial(paths);
        auto b = build_solution_graph(paths);
        CHECK(a.paths == b.paths);
        CHECK(a.adj == b.adj);
    }
}

TEST_CASE("count_isolated parallel matches serial exactly") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_graph(40, 0.12, seed);
        std::pair<Vertex, Vertex> st;
        try {
            st = max_distance_pair(g);
        } catch (const validation_error&) {
            continue;
        }
        if (st.first == st.second) continue;
        auto lay = compute_layering(g, st.first, st.second);
        CHECK(count_isolated(g, lay) == count_isolated_serial(g, lay));
    }
}
