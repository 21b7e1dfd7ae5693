#include "listpack/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace listpack::sample {

Graph random_graph(int n, double p, CounterRng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_bipartite_graph(int left, int right, double p, CounterRng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = 0; v < right; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, left + v);
    return Graph(left + right, std::move(edges));
}

Graph random_bipartite_regularish(int side, int degree, CounterRng& rng) {
    std::set<Edge> edges;
    std::vector<int> perm(static_cast<std::size_t>(side));
    for (int round = 0; round < degree; ++round) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        for (int u = 0; u < side; ++u)
            edges.emplace(u, side + perm[static_cast<std::size_t>(u)]);
    }
    return Graph(2 * side, {edges.begin(), edges.end()});
}

CorrespondenceCover random_cover(const Graph& g, int k, CounterRng& rng, bool full) {
    MatchingMap matchings;
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (const auto& e : g.edges()) {
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(std::span<int>(perm));
        auto& m = matchings[e];
        for (int i = 0; i < k; ++i)
            if (full || rng.bernoulli(0.5))
                m.emplace_back(i, perm[static_cast<std::size_t>(i)]);
    }
    return {g, k, std::move(matchings)};
}

ListAssignment random_lists(int n, int k, int palette, CounterRng& rng) {
    if (palette < k)
        throw std::invalid_argument("random_lists: palette smaller than k");
    std::vector<int> colours(static_cast<std::size_t>(palette));
    std::vector<std::vector<Colour>> lists;
    for (int v = 0; v < n; ++v) {
        std::iota(colours.begin(), colours.end(), 0);
        rng.shuffle(std::span<int>(colours));
        lists.emplace_back(colours.begin(), colours.begin() + k);
    }
    return ListAssignment(std::move(lists));
}

ListAssignment random_bounded_lists(int n, int k, CounterRng& rng) {
    // Before vertex v at most v colours are used up, so n + k - 1 colours
    // always leave k with spare capacity.
    const int palette = n + k - 1;
    std::vector<int> uses(static_cast<std::size_t>(palette), 0);
    std::vector<std::vector<Colour>> lists;
    for (int v = 0; v < n; ++v) {
        std::vector<int> open;
        for (int c = 0; c < palette; ++c)
            if (uses[static_cast<std::size_t>(c)] < k)
                open.push_back(c);
        rng.shuffle(std::span<int>(open));
        open.resize(static_cast<std::size_t>(k));
        for (int c : open)
            ++uses[static_cast<std::size_t>(c)];
        lists.push_back(std::move(open));
    }
    return ListAssignment(std::move(lists));
}

}  // namespace listpack::sample
