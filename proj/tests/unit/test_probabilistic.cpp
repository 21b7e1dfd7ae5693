#include "doctest.h"
#include "oracles.hpp"

#include "listpack/probabilistic.hpp"
#include "listpack/random_instances.hpp"

#include <map>

using namespace listpack;
using namespace listpack::probabilistic;

TEST_CASE("fractional colouring helpers") {
    auto fc = bipartite_fractional(cycle_graph(6));
    CHECK(fc.a == 2);
    CHECK(fc.b == 1);
    CHECK_FALSE(validate_fractional(cycle_graph(6), fc));
    CHECK_THROWS_AS(bipartite_fractional(cycle_graph(5)), std::invalid_argument);

    auto k3 = from_proper_colouring(complete_graph(3), {0, 1, 2}, 3);
    CHECK_FALSE(validate_fractional(complete_graph(3), k3));
    CHECK_THROWS_AS(from_proper_colouring(complete_graph(3), {0, 1, 1}, 3), std::invalid_argument);

    FractionalColoring c5{5, 2, {{0, 1}, {2, 3}, {4, 0}, {1, 2}, {3, 4}}};
    CHECK_FALSE(validate_fractional(cycle_graph(5), c5));
    c5.assignment[1] = {1, 3};
    CHECK(validate_fractional(cycle_graph(5), c5));
    CHECK(validate_fractional(cycle_graph(5), FractionalColoring{2, 3, {}}));
}

TEST_CASE("pack_fractional examples") {
    ListInstance edge{complete_graph(2), ListAssignment({{1, 2}, {1, 2}})};
    FractionalColoring fc{2, 1, {{0}, {1}}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = pack_fractional(edge, fc, 200, seed);
        REQUIRE(r.packing);
        CHECK(oracle::is_list_packing(edge, *r.packing));
    }

    ListInstance edgeless{Graph(3, {}), ListAssignment({{1, 2}, {2, 3}, {5, 7}})};
    FractionalColoring all{2, 2, {{0, 1}, {0, 1}, {0, 1}}};
    auto r = pack_fractional(edgeless, all, 10, 1);
    REQUIRE(r.packing);
    CHECK(r.steps == 1);

    CHECK_THROWS_AS(pack_fractional(edge, FractionalColoring{2, 1, {{0}, {0}}}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(pack_fractional(ListInstance{complete_graph(2), ListAssignment({{1, 2}, {1}})}, fc, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("pack_fractional on C6 with 5-lists") {
    auto g = cycle_graph(6);
    auto fc = bipartite_fractional(g);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CounterRng rng(seed, 40);
        ListInstance inst{g, sample::random_lists(6, 5, 8, rng)};
        auto r = pack_fractional(inst, fc, 50, seed);
        if (r.packing) {
            REQUIRE(oracle::is_list_packing(inst, *r.packing));
            ++successes;
        }
        CHECK(r.budget == 50);
    }
    CHECK(successes == 100);
}

TEST_CASE("fractional rounds decode through the sampled vectors") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        CounterRng rng(seed, 41);
        auto g = sample::random_bipartite_graph(4, 4, 0.5, rng);
        auto fc = bipartite_fractional(g);
        ListInstance inst{g, sample::random_lists(8, 4, 6, rng)};
        auto round = fractional_round(inst, fc, seed, 0);
        if (!round.packing)
            continue;
        const auto& p = *round.packing;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int i = 0; i < p.k; ++i) {
                const auto& x = round.vector_of(p.colourings[i][v]);
                const auto& allowed = fc.assignment[v];
                REQUIRE(std::find(allowed.begin(), allowed.end(), x[i]) != allowed.end());
                for (int j = i + 1; j < p.k; ++j)
                    REQUIRE(p.colourings[i][v] != p.colourings[j][v]);
            }
        for (auto [u, v] : g.edges())
            for (int i = 0; i < p.k; ++i)
                REQUIRE(p.colourings[i][u] != p.colourings[i][v]);
        REQUIRE(oracle::is_list_packing(inst, p));
    }
}

TEST_CASE("pack_bipartite_lll examples") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    MatchingMap m;
    for (auto e : star.edges())
        for (int i = 0; i < 4; ++i)
            m[e].emplace_back(i, i);
    CorrespondenceCover cover(star, 4, m);
    auto r = pack_bipartite_lll(cover, 1000, 7);
    REQUIRE(r.packing);
    CHECK(oracle::is_cover_packing(cover, *r.packing));

    CorrespondenceCover empty(complete_bipartite_graph(3, 3), 3, {});
    auto e = pack_bipartite_lll(empty, 10, 1);
    REQUIRE(e.packing);
    CHECK(e.steps == 0);
    CHECK(e.budget == 10);

    CHECK_THROWS_AS(pack_bipartite_lll(CorrespondenceCover(complete_graph(3), 2, {}), 10, 1), std::invalid_argument);
    CHECK(pack_bipartite_lll(empty, 0, 1).budget == 30);
}

TEST_CASE("pack_bipartite_lll never returns an invalid packing") {
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CounterRng rng(seed, 42);
        auto g = sample::random_bipartite_regularish(6, 3, rng);
        auto cover = sample::random_cover(g, 4, rng);
        auto r = pack_bipartite_lll(cover, 100, seed);
        CHECK(r.steps <= r.budget);
        if (r.packing) {
            REQUIRE(oracle::is_cover_packing(cover, *r.packing));
            ++successes;
        }
    }
    CHECK(successes > 0);
}

TEST_CASE("initial B orderings are uniform") {
    // One B vertex, k = 3: each of the 6 orderings should appear about
    // 10^4 / 6 times. Chi-squared with 5 degrees of freedom; 20.52 is the
    // 0.999 quantile.
    CorrespondenceCover cover(complete_graph(2), 3, {});
    std::map<std::vector<Slot>, int> counts;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) {
        auto o = initial_b_orderings(cover, static_cast<std::uint64_t>(s));
        CHECK(o[0].empty());
        counts[o[1]]++;
    }
    REQUIRE(counts.size() == 6);
    double chi2 = 0;
    const double expected = samples / 6.0;
    for (auto [ordering, c] : counts)
        chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 20.52);
}

TEST_CASE("randomized packers are deterministic") {
    CounterRng rng(9);
    auto g = sample::random_bipartite_regularish(8, 3, rng);
    auto cover = sample::random_cover(g, 4, rng);
    auto a = pack_bipartite_lll(cover, 200, 33);
    auto b = pack_bipartite_lll(cover, 200, 33);
    CHECK(a.steps == b.steps);
    CHECK(a.packing == b.packing);

    ListInstance inst{g, sample::random_lists(16, 5, 7, rng)};
    auto fc = bipartite_fractional(g);
    auto x = pack_fractional(inst, fc, 30, 4);
    auto y = pack_fractional(inst, fc, 30, 4);
    CHECK(x.steps == y.steps);
    CHECK(x.packing == y.packing);
}
