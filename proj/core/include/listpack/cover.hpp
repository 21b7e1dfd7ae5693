#pragma once

#include "listpack/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace listpack {

using Colour = int;
using Slot = int;

inline constexpr int unassigned = -1;

/// Per-vertex colour lists. Lists are stored sorted and duplicate-free, so a
/// colour's slot index is its rank within its list.
class ListAssignment {
  public:
    ListAssignment() = default;
    /// Throws std::invalid_argument on negative colours or repeated colours
    /// within one list.
    explicit ListAssignment(std::vector<std::vector<Colour>> lists);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    std::span<const Colour> list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Colour>>& lists() const { return lists_; }

    /// k if every list has exactly k colours.
    std::optional<int> uniform_size() const;
    /// Rank of `c` in L(v), or -1.
    Slot slot_of(Vertex v, Colour c) const;

    bool operator==(const ListAssignment&) const = default;

  private:
    std::vector<std::vector<Colour>> lists_;
};

struct ListInstance {
    Graph graph;
    ListAssignment lists;
};

using SlotPair = std::pair<Slot, Slot>;
using MatchingMap = std::map<Edge, std::vector<SlotPair>>;

/// k-fold correspondence cover. The matching on edge (u, v), u < v, holds
/// pairs (i, j): slot i of u conflicts with slot j of v. Edges missing from
/// the map carry the empty matching.
///
/// Construction never throws on a malformed matching; validate_cover()
/// reports it, and algorithms call require_valid() before use.
class CorrespondenceCover {
  public:
    CorrespondenceCover() = default;
    CorrespondenceCover(Graph graph, int k, MatchingMap matchings);

    const Graph& graph() const { return graph_; }
    int k() const { return k_; }
    int vertex_count() const { return graph_.vertex_count(); }
    const MatchingMap& matchings() const { return matchings_; }

    /// Slot of `to` matched with slot `slot` of `from` along edge `edge`,
    /// or -1. Only meaningful on a valid cover.
    Slot partner(int edge, Vertex from, Slot slot) const {
        const auto& e = graph_.edge(edge);
        const auto& table = from == e.first ? low_to_high_ : high_to_low_;
        return table[static_cast<std::size_t>(edge) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(slot)];
    }

    /// Throws std::invalid_argument carrying the violation report.
    void require_valid() const;

    bool operator==(const CorrespondenceCover& other) const {
        return graph_ == other.graph_ && k_ == other.k_ && matchings_ == other.matchings_;
    }

  private:
    Graph graph_;
    int k_ = 0;
    MatchingMap matchings_;
    std::vector<Slot> low_to_high_;
    std::vector<Slot> high_to_low_;
};

struct Violation {
    std::string message;
};

/// nullopt when every cover invariant holds; otherwise names the first bad
/// edge or slot.
std::optional<Violation> validate_cover(const CorrespondenceCover& cover);

enum class PackingMode { list, cover };

/// k disjoint colourings; colourings[i][v] is a colour in list mode and a
/// slot index in cover mode.
struct Packing {
    int k = 0;
    PackingMode mode = PackingMode::cover;
    std::vector<std::vector<int>> colourings;

    bool operator==(const Packing&) const = default;
};

/// As Packing, with `unassigned` entries allowed.
struct PartialPacking {
    int k = 0;
    int n = 0;
    std::vector<std::vector<int>> colourings;

    PartialPacking() = default;
    PartialPacking(int k, int n);

    int assigned_count() const;
    bool complete() const { return assigned_count() == k * n; }
    Packing to_packing() const;
};

/// Cover-mode check. Throws std::invalid_argument on a shape mismatch.
std::optional<Violation> validate_packing(const CorrespondenceCover& cover, const Packing& packing);
/// List-mode check against the lists themselves.
std::optional<Violation> validate_packing(const ListInstance& instance, const Packing& packing);
/// Disjointness and properness on assigned entries only.
std::optional<Violation> validate_partial(const CorrespondenceCover& cover, const PartialPacking& partial);

/// List-cover: slot i of u conflicts with slot j of v exactly when the i-th
/// colour of L(u) equals the j-th colour of L(v). Throws if lists are not of
/// one common size or do not match the graph.
CorrespondenceCover list_to_cover(const Graph& g, const ListAssignment& lists);

/// Slot-indexed packing of list_to_cover(g, lists) <-> colour packing.
Packing slots_to_colours(const ListAssignment& lists, const Packing& slots);
Packing colours_to_slots(const ListAssignment& lists, const Packing& colours);

}  // namespace listpack
