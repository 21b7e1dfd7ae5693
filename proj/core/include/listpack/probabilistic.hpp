#pragma once

#include "listpack/cover.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace listpack::probabilistic {

/// Proper (a, b)-colouring: each vertex holds a b-subset of {0..a-1} and
/// adjacent subsets are disjoint. a / b bounds the fractional chromatic
/// number from above.
struct FractionalColoring {
    int a = 0;
    int b = 0;
    std::vector<std::vector<int>> assignment;

    bool operator==(const FractionalColoring&) const = default;
};

std::optional<Violation> validate_fractional(const Graph& g, const FractionalColoring& fc);

/// (2, 1)-colouring from a bipartition. Throws std::invalid_argument if g is
/// not bipartite.
FractionalColoring bipartite_fractional(const Graph& g);
/// (t, 1)-colouring from a proper colouring with colours 0..t-1.
FractionalColoring from_proper_colouring(const Graph& g, const std::vector<int>& colours, int t);

struct RandomizedOutcome {
    std::optional<Packing> packing;
    /// Rounds sampled (pack_fractional) or resampling steps (pack_bipartite_lll).
    std::uint64_t steps = 0;
    std::uint64_t budget = 0;
};

/// One sampled round of pack_fractional: the random vector of every colour
/// and the decoded packing when every vertex has a transversal.
struct FractionalRound {
    std::vector<Colour> colours;
    std::vector<std::vector<int>> vectors;
    std::optional<Packing> packing;

    const std::vector<int>& vector_of(Colour c) const;
};

FractionalRound fractional_round(const ListInstance& instance, const FractionalColoring& fc, std::uint64_t seed,
                                 std::uint64_t round);

/// Random-vector packer. Every colour l gets x_l uniform in {0..a-1}^k; M(v)
/// has column j equal to x of the j-th colour of L(v). The round succeeds
/// when every M(v) has a transversal using only values in fc(v); row i of the
/// transversal gives c_i(v). Retries up to max_rounds (0 means 10 * n) and
/// returns no packing if every round fails. Output is list mode.
RandomizedOutcome pack_fractional(const ListInstance& instance, const FractionalColoring& fc, std::uint64_t max_rounds,
                                  std::uint64_t seed);

/// Moser-Tardos packer for covers of bipartite graphs (A = side with smaller
/// maximum degree). Each b in B gets a uniform slot ordering, c_i(b) its i-th
/// slot. M(a)[i][s] = 1 iff slot s of a is matched to some neighbour's c_i
/// slot; a is bad when M(a) has no 0-transversal. While a bad vertex exists,
/// the lowest one has all its neighbours resampled. max_resamples 0 means
/// 10 * |A|. Output is cover mode.
RandomizedOutcome pack_bipartite_lll(const CorrespondenceCover& cover, std::uint64_t max_resamples, std::uint64_t seed);

/// B-side orderings before any resampling, for distribution checks:
/// result[b] is the slot sequence of b (empty for A vertices).
std::vector<std::vector<Slot>> initial_b_orderings(const CorrespondenceCover& cover, std::uint64_t seed);

}  // namespace listpack::probabilistic
