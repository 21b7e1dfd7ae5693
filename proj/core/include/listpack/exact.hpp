#pragma once

#include "listpack/cover.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listpack::exact {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

/// Node-count limit for exhaustive search. Running out is reported as
/// SearchStatus::budget_exceeded, never as "none".
struct SearchBudget {
    std::uint64_t max_nodes = default_node_budget;
};

enum class SearchStatus { found, none, budget_exceeded };

template <class T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::none;
    std::optional<T> value;
    std::uint64_t nodes = 0;
};

/// Complete search for a cover-mode packing of a valid cover (k <= 64).
///
/// Vertices are taken in degeneracy order; each branch fixes a whole column
/// (the slot every colouring uses at one vertex) and forward-checks that
/// every unassigned neighbour still admits a perfect matching between
/// colourings and usable slots. The first vertex is fixed to the identity
/// column since colourings are interchangeable.
SearchOutcome<Packing> find_packing(const CorrespondenceCover& cover, SearchBudget budget = {});

/// One slot per vertex, slot in allowed[v], no two chosen slots matched
/// along an edge.
SearchOutcome<std::vector<Slot>> find_independent_transversal(const CorrespondenceCover& cover,
                                                              const std::vector<std::vector<Slot>>& allowed,
                                                              SearchBudget budget = {});

enum class ChiStarVerdict { all_pack, witness, budget_exceeded };

struct ListChiStarResult {
    ChiStarVerdict verdict = ChiStarVerdict::all_pack;
    std::optional<ListAssignment> witness;
    std::uint64_t assignments_checked = 0;
    std::uint64_t nodes = 0;
};

struct CorrChiStarResult {
    ChiStarVerdict verdict = ChiStarVerdict::all_pack;
    std::optional<CorrespondenceCover> witness;
    std::uint64_t covers_checked = 0;
    std::uint64_t nodes = 0;
};

/// Calls `visit` (with the lists as vector<vector<Colour>>) on one representative of every k-list-assignment of an
/// n-vertex graph up to renaming colours. Colours are named by first
/// appearance in vertex order, so vertex v's list is some old colours plus
/// the next unused names. Every class is visited at least once (possibly
/// more). Stops early when `visit` returns false; returns the number of
/// assignments visited.
template <class Visit>
std::uint64_t for_each_canonical_assignment(int n, int k, Visit&& visit);

/// Witness assignment with no packing (chi*_l(g) > k), or all_pack when
/// every canonical k-assignment packs. `budget` caps search nodes summed over
/// all assignments.
ListChiStarResult decide_chi_star_list(const Graph& g, int k, SearchBudget budget = {});

/// Same question over k-fold covers whose matchings are all perfect. Edges of
/// a spanning forest carry the identity matching (slot relabelling), every
/// other edge ranges over all k! permutations. Perfect matchings suffice:
/// adding conflicts never creates a packing, so any packless cover extends to
/// a packless cover in this class.
CorrChiStarResult decide_chi_star_corr(const Graph& g, int k, SearchBudget budget = {});

}  // namespace listpack::exact

#include "listpack/detail/canonical_assignments.hpp"
