#include "listpack/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace listpack {

namespace {

std::string edge_name(const Edge& e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

void check_shape(int k, int n, const std::vector<std::vector<int>>& colourings) {
    if (static_cast<int>(colourings.size()) != k)
        throw std::invalid_argument("packing has " + std::to_string(colourings.size()) + " colourings, expected " +
                                    std::to_string(k));
    for (const auto& c : colourings)
        if (static_cast<int>(c.size()) != n)
            throw std::invalid_argument("colouring length " + std::to_string(c.size()) + " does not match " +
                                        std::to_string(n) + " vertices");
}

}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& l = lists_[v];
        std::sort(l.begin(), l.end());
        if (!l.empty() && l.front() < 0)
            throw std::invalid_argument("list of vertex " + std::to_string(v) + " has a negative colour");
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw std::invalid_argument("list of vertex " + std::to_string(v) + " repeats a colour");
    }
}

std::optional<int> ListAssignment::uniform_size() const {
    if (lists_.empty())
        return 0;
    const auto k = lists_.front().size();
    for (const auto& l : lists_)
        if (l.size() != k)
            return std::nullopt;
    return static_cast<int>(k);
}

Slot ListAssignment::slot_of(Vertex v, Colour c) const {
    const auto& l = lists_[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it == l.end() || *it != c)
        return -1;
    return static_cast<Slot>(it - l.begin());
}

CorrespondenceCover::CorrespondenceCover(Graph graph, int k, MatchingMap matchings)
    : graph_(std::move(graph)), k_(k), matchings_(std::move(matchings)) {
    if (k_ < 0)
        throw std::invalid_argument("cover: negative fold");
    const auto size = graph_.edge_count() * static_cast<std::size_t>(k_);
    low_to_high_.assign(size, -1);
    high_to_low_.assign(size, -1);
    for (const auto& [edge, pairs] : matchings_) {
        int e = graph_.edge_index(edge.first, edge.second);
        if (e < 0 || edge.first > edge.second)
            continue;
        for (auto [i, j] : pairs) {
            if (i < 0 || j < 0 || i >= k_ || j >= k_)
                continue;
            low_to_high_[static_cast<std::size_t>(e) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(i)] = j;
            high_to_low_[static_cast<std::size_t>(e) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j)] = i;
        }
    }
}

void CorrespondenceCover::require_valid() const {
    if (auto v = validate_cover(*this))
        throw std::invalid_argument("invalid cover: " + v->message);
}

std::optional<Violation> validate_cover(const CorrespondenceCover& cover) {
    const auto& g = cover.graph();
    const int k = cover.k();
    for (const auto& [edge, pairs] : cover.matchings()) {
        if (edge.first >= edge.second)
            return Violation{"matching key " + edge_name(edge) + " is not oriented low-high"};
        if (!g.has_edge(edge.first, edge.second))
            return Violation{"matching on " + edge_name(edge) + " which is not an edge"};
        std::vector<bool> seen_low(static_cast<std::size_t>(k), false), seen_high(static_cast<std::size_t>(k), false);
        for (auto [i, j] : pairs) {
            if (i < 0 || j < 0 || i >= k || j >= k)
                return Violation{"edge " + edge_name(edge) + ": slot pair (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range for k=" + std::to_string(k)};
            if (seen_low[static_cast<std::size_t>(i)])
                return Violation{"edge " + edge_name(edge) + ": slot " + std::to_string(i) + " of vertex " +
                                 std::to_string(edge.first) + " matched twice"};
            if (seen_high[static_cast<std::size_t>(j)])
                return Violation{"edge " + edge_name(edge) + ": slot " + std::to_string(j) + " of vertex " +
                                 std::to_string(edge.second) + " matched twice"};
            seen_low[static_cast<std::size_t>(i)] = seen_high[static_cast<std::size_t>(j)] = true;
        }
    }
    return std::nullopt;
}

PartialPacking::PartialPacking(int k_, int n_)
    : k(k_), n(n_), colourings(static_cast<std::size_t>(k_), std::vector<int>(static_cast<std::size_t>(n_), unassigned)) {}

int PartialPacking::assigned_count() const {
    int count = 0;
    for (const auto& c : colourings)
        count += static_cast<int>(std::count_if(c.begin(), c.end(), [](int x) { return x != unassigned; }));
    return count;
}

Packing PartialPacking::to_packing() const {
    if (!complete())
        throw std::logic_error("partial packing still has unassigned entries");
    return Packing{k, PackingMode::cover, colourings};
}

namespace {

std::optional<Violation> check_cover_entries(const CorrespondenceCover& cover, const std::vector<std::vector<int>>& col,
                                             bool allow_unassigned) {
    const int k = cover.k();
    const int n = cover.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        std::vector<bool> used(static_cast<std::size_t>(k), false);
        for (int i = 0; i < k; ++i) {
            int s = col[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            if (s == unassigned && allow_unassigned)
                continue;
            if (s < 0 || s >= k)
                return Violation{"colouring " + std::to_string(i) + " gives vertex " + std::to_string(v) + " slot " +
                                 std::to_string(s) + " outside 0.." + std::to_string(k - 1)};
            if (used[static_cast<std::size_t>(s)])
                return Violation{"vertex " + std::to_string(v) + ": slot " + std::to_string(s) +
                                 " used by two colourings (not disjoint)"};
            used[static_cast<std::size_t>(s)] = true;
        }
    }
    const auto& g = cover.graph();
    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
        auto [u, v] = g.edge(e);
        for (int i = 0; i < k; ++i) {
            int su = col[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)];
            int sv = col[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            if (su == unassigned || sv == unassigned)
                continue;
            if (cover.partner(e, u, su) == sv)
                return Violation{"colouring " + std::to_string(i) + " is not proper on edge " + edge_name({u, v}) +
                                 " (slots " + std::to_string(su) + "," + std::to_string(sv) + " conflict)"};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> validate_packing(const CorrespondenceCover& cover, const Packing& packing) {
    if (packing.k != cover.k())
        throw std::invalid_argument("packing size " + std::to_string(packing.k) + " differs from cover fold " +
                                    std::to_string(cover.k()));
    if (packing.mode != PackingMode::cover)
        throw std::invalid_argument("list-mode packing checked against a cover");
    check_shape(packing.k, cover.vertex_count(), packing.colourings);
    cover.require_valid();
    return check_cover_entries(cover, packing.colourings, false);
}

std::optional<Violation> validate_partial(const CorrespondenceCover& cover, const PartialPacking& partial) {
    if (partial.k != cover.k() || partial.n != cover.vertex_count())
        throw std::invalid_argument("partial packing shape does not match cover");
    check_shape(partial.k, partial.n, partial.colourings);
    return check_cover_entries(cover, partial.colourings, true);
}

std::optional<Violation> validate_packing(const ListInstance& instance, const Packing& packing) {
    const auto& g = instance.graph;
    const int n = g.vertex_count();
    if (instance.lists.vertex_count() != n)
        throw std::invalid_argument("list assignment does not match graph");
    if (packing.mode != PackingMode::list)
        throw std::invalid_argument("cover-mode packing checked against a list instance");
    check_shape(packing.k, n, packing.colourings);
    const auto& col = packing.colourings;
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i < packing.k; ++i) {
            Colour c = col[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            if (instance.lists.slot_of(v, c) < 0)
                return Violation{"colouring " + std::to_string(i) + " gives vertex " + std::to_string(v) + " colour " +
                                 std::to_string(c) + " outside its list"};
            for (int j = 0; j < i; ++j)
                if (col[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] == c)
                    return Violation{"vertex " + std::to_string(v) + ": colour " + std::to_string(c) +
                                     " used by colourings " + std::to_string(j) + " and " + std::to_string(i) +
                                     " (not disjoint)"};
        }
    }
    for (auto [u, v] : g.edges())
        for (int i = 0; i < packing.k; ++i)
            if (col[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] ==
                col[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)])
                return Violation{"colouring " + std::to_string(i) + " is not proper on edge " + edge_name({u, v})};
    return std::nullopt;
}

CorrespondenceCover list_to_cover(const Graph& g, const ListAssignment& lists) {
    if (lists.vertex_count() != g.vertex_count())
        throw std::invalid_argument("list_to_cover: list assignment does not match graph");
    auto k = lists.uniform_size();
    if (!k)
        throw std::invalid_argument("list_to_cover: lists have unequal sizes");
    MatchingMap matchings;
    for (auto [u, v] : g.edges()) {
        auto lu = lists.list(u), lv = lists.list(v);
        std::vector<SlotPair> pairs;
        // sorted merge over two sorted lists
        std::size_t i = 0, j = 0;
        while (i < lu.size() && j < lv.size()) {
            if (lu[i] < lv[j]) {
                ++i;
            } else if (lv[j] < lu[i]) {
                ++j;
            } else {
                pairs.emplace_back(static_cast<Slot>(i), static_cast<Slot>(j));
                ++i;
                ++j;
            }
        }
        matchings.emplace(Edge{u, v}, std::move(pairs));
    }
    return CorrespondenceCover(g, *k, std::move(matchings));
}

Packing slots_to_colours(const ListAssignment& lists, const Packing& slots) {
    Packing out{slots.k, PackingMode::list, slots.colourings};
    for (auto& c : out.colourings)
        for (std::size_t v = 0; v < c.size(); ++v)
            c[v] = lists.list(static_cast<Vertex>(v))[static_cast<std::size_t>(c[v])];
    return out;
}

Packing colours_to_slots(const ListAssignment& lists, const Packing& colours) {
    Packing out{colours.k, PackingMode::cover, colours.colourings};
    for (auto& c : out.colourings)
        for (std::size_t v = 0; v < c.size(); ++v) {
            Slot s = lists.slot_of(static_cast<Vertex>(v), c[v]);
            if (s < 0)
                throw std::invalid_argument("colours_to_slots: colour " + std::to_string(c[v]) + " not in list of vertex " +
                                            std::to_string(v));
            c[v] = s;
        }
    return out;
}

}  // namespace listpack
