#include "listpack/probabilistic.hpp"

#include "listpack/constructive.hpp"
#include "listpack/matching.hpp"
#include "listpack/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace listpack::probabilistic {

namespace {

using Mask = unsigned long long;

Mask full_mask(int k) { return k >= 64 ? ~Mask{0} : (Mask{1} << k) - 1; }

int require_uniform_lists(const ListInstance& instance) {
    if (instance.lists.vertex_count() != instance.graph.vertex_count())
        throw std::invalid_argument("list assignment does not match graph");
    auto k = instance.lists.uniform_size();
    if (!k)
        throw std::invalid_argument("lists have unequal sizes");
    if (*k > 64)
        throw std::invalid_argument("list size above 64 is not supported");
    return *k;
}

}  // namespace

std::optional<Violation> validate_fractional(const Graph& g, const FractionalColoring& fc) {
    if (fc.a < 1 || fc.b < 1 || fc.b > fc.a)
        return Violation{"need 1 <= b <= a"};
    if (static_cast<int>(fc.assignment.size()) != g.vertex_count())
        return Violation{"assignment has " + std::to_string(fc.assignment.size()) + " entries for " +
                         std::to_string(g.vertex_count()) + " vertices"};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<int> values(fc.assignment[static_cast<std::size_t>(v)].begin(), fc.assignment[static_cast<std::size_t>(v)].end());
        if (static_cast<int>(values.size()) != fc.b || static_cast<int>(fc.assignment[static_cast<std::size_t>(v)].size()) != fc.b)
            return Violation{"vertex " + std::to_string(v) + " does not hold exactly b distinct values"};
        if (*values.begin() < 0 || *values.rbegin() >= fc.a)
            return Violation{"vertex " + std::to_string(v) + " holds a value outside 0..a-1"};
    }
    for (auto [u, v] : g.edges())
        for (int x : fc.assignment[static_cast<std::size_t>(u)])
            if (std::find(fc.assignment[static_cast<std::size_t>(v)].begin(), fc.assignment[static_cast<std::size_t>(v)].end(), x) !=
                fc.assignment[static_cast<std::size_t>(v)].end())
                return Violation{"adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " share value " +
                                 std::to_string(x)};
    return std::nullopt;
}

FractionalColoring bipartite_fractional(const Graph& g) {
    auto side = bipartition(g);
    if (!side)
        throw std::invalid_argument("bipartite_fractional: graph is not bipartite");
    return from_proper_colouring(g, *side, 2);
}

FractionalColoring from_proper_colouring(const Graph& g, const std::vector<int>& colours, int t) {
    FractionalColoring fc{t, 1, {}};
    for (int c : colours)
        fc.assignment.push_back({c});
    if (auto bad = validate_fractional(g, fc))
        throw std::invalid_argument("from_proper_colouring: " + bad->message);
    return fc;
}

const std::vector<int>& FractionalRound::vector_of(Colour c) const {
    auto it = std::lower_bound(colours.begin(), colours.end(), c);
    if (it == colours.end() || *it != c)
        throw std::out_of_range("colour not in round");
    return vectors[static_cast<std::size_t>(it - colours.begin())];
}

FractionalRound fractional_round(const ListInstance& instance, const FractionalColoring& fc, std::uint64_t seed,
                                 std::uint64_t round) {
    const int k = require_uniform_lists(instance);
    const int n = instance.graph.vertex_count();
    CounterRng rng(seed, round);
    FractionalRound out;
    std::set<Colour> all;
    for (const auto& l : instance.lists.lists())
        all.insert(l.begin(), l.end());
    out.colours.assign(all.begin(), all.end());
    for (std::size_t c = 0; c < out.colours.size(); ++c) {
        std::vector<int> x(static_cast<std::size_t>(k));
        for (auto& value : x)
            value = static_cast<int>(rng.below(static_cast<std::uint64_t>(fc.a)));
        out.vectors.push_back(std::move(x));
    }

    Packing packing{k, PackingMode::list,
                    std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)))};
    std::vector<int> sigma;
    for (Vertex v = 0; v < n; ++v) {
        auto list = instance.lists.list(v);
        const auto& allowed = fc.assignment[static_cast<std::size_t>(v)];
        // M*(v)[i][j] = 1 iff x_{L(v)_j}[i] is in fc(v)
        std::vector<Mask> rows(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            const auto& x = out.vector_of(list[static_cast<std::size_t>(j)]);
            for (int i = 0; i < k; ++i)
                if (std::find(allowed.begin(), allowed.end(), x[static_cast<std::size_t>(i)]) != allowed.end())
                    rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
        }
        if (!perfect_matching_bitmask(rows, sigma))
            return out;
        for (int i = 0; i < k; ++i)
            packing.colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                list[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
    }
    out.packing = std::move(packing);
    return out;
}

RandomizedOutcome pack_fractional(const ListInstance& instance, const FractionalColoring& fc, std::uint64_t max_rounds,
                                  std::uint64_t seed) {
    require_uniform_lists(instance);
    if (auto bad = validate_fractional(instance.graph, fc))
        throw std::invalid_argument("pack_fractional: invalid (a,b)-colouring: " + bad->message);
    RandomizedOutcome out;
    out.budget = max_rounds ? max_rounds : 10 * static_cast<std::uint64_t>(std::max(1, instance.graph.vertex_count()));
    for (std::uint64_t round = 0; round < out.budget; ++round) {
        auto r = fractional_round(instance, fc, seed, round);
        out.steps = round + 1;
        if (r.packing) {
            out.packing = std::move(r.packing);
            break;
        }
    }
    return out;
}

namespace {

class LllState {
  public:
    LllState(const CorrespondenceCover& cover, std::uint64_t seed)
        : cover_(cover), g_(cover.graph()), k_(cover.k()), rng_(seed), orderings_(static_cast<std::size_t>(g_.vertex_count())) {
        cover.require_valid();
        if (k_ > 64)
            throw std::invalid_argument("pack_bipartite_lll: k above 64 is not supported");
        side_ = constructive::ordered_sides(g_);
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (side_[static_cast<std::size_t>(v)] == 1)
                resample(v);
            else
                a_count_++;
    }

    void resample(Vertex b) {
        auto& o = orderings_[static_cast<std::size_t>(b)];
        o.resize(static_cast<std::size_t>(k_));
        std::iota(o.begin(), o.end(), 0);
        rng_.shuffle(std::span<int>(o));
    }

    /// Rows of the zero-indicator of M(a): bit s of rows[i] set iff slot s
    /// of a avoids every neighbour's c_i slot.
    std::vector<Mask> free_rows(Vertex a) const {
        std::vector<Mask> rows(static_cast<std::size_t>(k_), full_mask(k_));
        for (auto [b, e] : g_.incident(a)) {
            const auto& o = orderings_[static_cast<std::size_t>(b)];
            for (int i = 0; i < k_; ++i) {
                Slot s = cover_.partner(e, b, o[static_cast<std::size_t>(i)]);
                if (s >= 0)
                    rows[static_cast<std::size_t>(i)] &= ~(Mask{1} << s);
            }
        }
        return rows;
    }

    const CorrespondenceCover& cover_;
    const Graph& g_;
    int k_;
    CounterRng rng_;
    std::vector<int> side_;
    std::vector<std::vector<Slot>> orderings_;
    int a_count_ = 0;
};

}  // namespace

std::vector<std::vector<Slot>> initial_b_orderings(const CorrespondenceCover& cover, std::uint64_t seed) {
    LllState state(cover, seed);
    return state.orderings_;
}

RandomizedOutcome pack_bipartite_lll(const CorrespondenceCover& cover, std::uint64_t max_resamples, std::uint64_t seed) {
    LllState state(cover, seed);
    const auto& g = cover.graph();
    const int n = g.vertex_count();
    const int k = cover.k();
    RandomizedOutcome out;
    out.budget = max_resamples ? max_resamples : 10 * static_cast<std::uint64_t>(std::max(1, state.a_count_));

    std::vector<int> sigma;
    while (true) {
        Vertex bad = -1;
        for (Vertex a = 0; a < n && bad < 0; ++a)
            if (state.side_[static_cast<std::size_t>(a)] == 0 && !perfect_matching_bitmask(state.free_rows(a), sigma))
                bad = a;
        if (bad < 0)
            break;
        if (out.steps >= out.budget)
            return out;
        for (auto [b, e] : g.incident(bad))
            state.resample(b);
        ++out.steps;
    }

    Packing packing{k, PackingMode::cover,
                    std::vector<std::vector<int>>(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)))};
    for (Vertex v = 0; v < n; ++v) {
        if (state.side_[static_cast<std::size_t>(v)] == 1) {
            for (int i = 0; i < k; ++i)
                packing.colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                    state.orderings_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            continue;
        }
        if (!perfect_matching_bitmask(state.free_rows(v), sigma))
            throw std::logic_error("pack_bipartite_lll: good vertex lost its transversal");
        for (int i = 0; i < k; ++i)
            packing.colourings[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = sigma[static_cast<std::size_t>(i)];
    }
    out.packing = std::move(packing);
    return out;
}

}  // namespace listpack::probabilistic
