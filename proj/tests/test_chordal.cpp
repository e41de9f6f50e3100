#include <doctest.h>

#include "fixtures.hpp"
#include "spr/chordal.hpp"
#include "spr/generators.hpp"
#include "spr/oracle.hpp"
#include "spr/recognition.hpp"

using namespace spr;
using namespace fixtures;

TEST_CASE("chordal_reroute trivial and small cases") {
    auto [g, s, t] = diamond();
    auto lay = compute_layering(g, s, t);
    Path p{0, 1, 3}, q{0, 2, 3};
    SUBCASE("P == Q") {
        auto seq = chordal_reroute(g, lay, p, p);
        CHECK(seq == RerouteSequence{p});
    }
    SUBCASE("single swap") {
        auto seq = chordal_reroute(g, lay, p, q);
        CHECK(seq == RerouteSequence{p, q});
        CHECK_FALSE(validate_reroute_sequence(g, lay, seq));
    }
    SUBCASE("invalid path rejected") {
        CHECK_THROWS_AS(chordal_reroute(g, lay, {0, 3, 3}, q), validation_error);
    }
}

TEST_CASE("on C4 the antipodal paths are adjacent, so no witness is needed") {
    auto [g, s, t] = c4();
    auto lay = compute_layering(g, s, t);
    auto seq = chordal_reroute(g, lay, {0, 1, 2}, {0, 3, 2});
    CHECK(seq.size() == 2);
    CHECK_FALSE(validate_reroute_sequence(g, lay, seq));
}

TEST_CASE("chordal_reroute raises a chordless-cycle witness on C6") {
    auto [g, s, t] = c6();
    auto lay = compute_layering(g, s, t);
    try {
        chordal_reroute(g, lay, {0, 1, 2, 3}, {0, 5, 4, 3});
        FAIL("expected non_chordal_witness");
    } catch (const non_chordal_witness& w) {
        REQUIRE(w.cycle.size() >= 4);
        // the witness is an induced cycle
        auto n = w.cycle.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
                CHECK(g.adjacent(w.cycle[i], w.cycle[j]) == consecutive);
            }
    }
}

TEST_CASE("witness implies the chordality check also fails") {
    for (int n : {6, 8, 10}) {
        auto g = gen_cycle(n);
        auto lay = compute_layering(g, 0, n / 2);
        Path p, q;
        for (int v = 0; v <= n / 2; ++v) p.push_back(v);
        q.push_back(0);
        for (int v = n - 1; v > n / 2; --v) q.push_back(v);
        q.push_back(n / 2);
        CHECK_THROWS_AS(chordal_reroute(g, lay, p, q), non_chordal_witness);
        CHECK_FALSE(chordality_check(g));
    }
}

TEST_CASE("chordal_reroute is exact on random k-trees") {
    int instances = 0;
    for (std::uint64_t seed = 0; instances < 25 && seed < 200; ++seed) {
        auto g = gen_ktree(10, 2, seed);
        auto [s, t] = max_distance_pair(g);
        if (s == t) continue;
        auto lay = compute_layering(g, s, t);
        auto paths = enumerate_shortest_paths(g, lay);
        if (paths.size() < 2) continue;
        ++instances;
        auto sg = build_solution_graph(paths);
        for (std::size_t a = 0; a < paths.size(); ++a)
            for (std::size_t b = 0; b < paths.size(); ++b) {
                auto seq = chordal_reroute(g, lay, paths[a], paths[b]);
                CHECK_FALSE(validate_reroute_sequence(g, lay, seq));
                CHECK(seq.front() == paths[a]);
                CHECK(seq.back() == paths[b]);
                int diff = path_difference(paths[a], paths[b]);
                CHECK(static_cast<int>(seq.size()) == diff + 1);
                auto dist = oracle_reachable(sg, paths[a], paths[b]);
                REQUIRE(dist);
                CHECK(*dist == diff);  // optimal length
            }
    }
    CHECK(instances == 25);
}
