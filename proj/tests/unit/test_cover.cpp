#include "doctest.h"
#include "oracles.hpp"

#include "listpack/cover.hpp"
#include "listpack/exact.hpp"
#include "listpack/random_instances.hpp"

using namespace listpack;

namespace {

CorrespondenceCover edge_cover(int k, std::vector<SlotPair> pairs) { return {complete_graph(2), k, {{{0, 1}, std::move(pairs)}}}; }

ListInstance k3_full() { return {complete_graph(3), ListAssignment({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})}; }

}  // namespace

TEST_CASE("validate_cover examples") {
    CHECK_FALSE(validate_cover(edge_cover(2, {{0, 0}, {1, 1}})));
    auto bad = validate_cover(edge_cover(2, {{0, 0}, {0, 1}}));
    REQUIRE(bad);
    CHECK(bad->message.find("0-1") != std::string::npos);
    CHECK(validate_cover(edge_cover(2, {{0, 0}, {1, 0}})));
    CHECK(validate_cover(edge_cover(2, {{0, 2}})));

    MatchingMap m;
    auto k3 = complete_graph(3);
    for (auto e : k3.edges())
        m[e] = {{0, 0}};
    CHECK_FALSE(validate_cover(CorrespondenceCover(k3, 1, m)));

    MatchingMap stray{{{0, 2}, {{0, 0}}}};
    CHECK(validate_cover(CorrespondenceCover(path_graph(3), 1, stray)));
    CHECK_THROWS_AS(CorrespondenceCover(path_graph(3), 1, stray).require_valid(), std::invalid_argument);
}

TEST_CASE("missing matchings are empty") {
    CorrespondenceCover cover(complete_graph(2), 2, {});
    CHECK_FALSE(validate_cover(cover));
    CHECK(cover.partner(0, 0, 1) == -1);
}

TEST_CASE("validate_packing on the K3 Latin square") {
    auto inst = k3_full();
    Packing latin{3, PackingMode::list, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    CHECK_FALSE(validate_packing(inst, latin));

    Packing clash{3, PackingMode::list, {{1, 1, 3}, {2, 3, 1}, {3, 2, 2}}};
    CHECK(validate_packing(inst, clash));

    Packing repeat{3, PackingMode::list, {{1, 2, 3}, {1, 3, 2}, {3, 1, 1}}};
    auto bad = validate_packing(inst, repeat);
    REQUIRE(bad);

    Packing short_row{3, PackingMode::list, {{1, 2}, {2, 3}, {3, 1}}};
    CHECK_THROWS_AS(validate_packing(inst, short_row), std::invalid_argument);
    auto cover = list_to_cover(inst.graph, inst.lists);
    CHECK_THROWS_AS(validate_packing(cover, Packing{2, PackingMode::cover, {{0, 1, 2}, {1, 2, 0}}}), std::invalid_argument);
}

TEST_CASE("list_to_cover examples") {
    auto c = list_to_cover(complete_graph(2), ListAssignment({{1, 2}, {2, 3}}));
    CHECK(c.matchings().at({0, 1}) == std::vector<SlotPair>{{1, 0}});
    auto d = list_to_cover(complete_graph(2), ListAssignment({{1, 2}, {3, 4}}));
    CHECK((d.matchings().count({0, 1}) == 0 || d.matchings().at({0, 1}).empty()));
    CHECK_THROWS_AS(list_to_cover(complete_graph(2), ListAssignment({{1, 2}, {3}})), std::invalid_argument);
}

TEST_CASE("validate_packing agrees with the direct definition") {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        CounterRng rng(seed, 1);
        const int n = 1 + static_cast<int>(rng.below(5));
        const int k = 1 + static_cast<int>(rng.below(3));
        auto g = sample::random_graph(n, 0.5, rng);
        auto cover = sample::random_cover(g, k, rng, rng.bernoulli(0.5));
        Packing p{k, PackingMode::cover, std::vector<std::vector<int>>(k, std::vector<int>(n))};
        // Mostly permutation columns so that valid packings show up too.
        for (int v = 0; v < n; ++v) {
            std::vector<int> col(k);
            std::iota(col.begin(), col.end(), 0);
            rng.shuffle(std::span<int>(col));
            for (int i = 0; i < k; ++i)
                p.colourings[i][v] = rng.bernoulli(0.05) ? static_cast<int>(rng.below(k)) : col[i];
        }
        REQUIRE(!validate_packing(cover, p) == oracle::is_cover_packing(cover, p));
    }
}

TEST_CASE("list packings and list-cover packings correspond") {
    int found = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        CounterRng rng(seed, 2);
        const int n = 2 + static_cast<int>(rng.below(4));
        const int k = 1 + static_cast<int>(rng.below(3));
        auto g = sample::random_graph(n, 0.6, rng);
        auto lists = sample::random_lists(n, k, k + 2, rng);
        auto cover = list_to_cover(g, lists);
        auto direct = exact::find_packing(cover);
        REQUIRE(direct.status != exact::SearchStatus::budget_exceeded);

        bool list_side = oracle::has_list_packing({g, lists}, k);
        REQUIRE((direct.status == exact::SearchStatus::found) == list_side);
        if (direct.value) {
            ++found;
            auto colours = slots_to_colours(lists, *direct.value);
            ListInstance inst{g, lists};
            REQUIRE_FALSE(validate_packing(inst, colours));
            REQUIRE(oracle::is_list_packing(inst, colours));
            REQUIRE(colours_to_slots(lists, colours) == *direct.value);
        }
    }
    CHECK(found > 50);
}

TEST_CASE("partial packings") {
    auto cover = list_to_cover(k3_full().graph, k3_full().lists);
    PartialPacking partial(3, 3);
    CHECK(partial.assigned_count() == 0);
    CHECK_FALSE(validate_partial(cover, partial));
    partial.colourings[0][0] = 0;
    partial.colourings[0][1] = 0;
    CHECK(validate_partial(cover, partial));
    partial.colourings[0][1] = 1;
    partial.colourings[1][0] = 0;
    CHECK(validate_partial(cover, partial));
    partial.colourings[1][0] = 2;
    CHECK_FALSE(validate_partial(cover, partial));
    CHECK(partial.assigned_count() == 3);
    CHECK_FALSE(partial.complete());
}
