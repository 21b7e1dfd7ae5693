#pragma once

#include "listpack/cover.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace listpack::constructive {

/// A packer's hypothesis does not hold for the given input.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A step the accompanying guarantee says cannot fail did fail.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Greedy packer for k >= 2 * degeneracy. Vertices are coloured in
/// degeneracy order; at each vertex the k colourings are matched to the k
/// slots, colouring i may take slot s unless an earlier neighbour's slot in
/// colouring i is matched to s. With at most d earlier neighbours every slot
/// is usable by >= k - d colourings and vice versa, which gives Hall's
/// condition once k >= 2d.
Packing pack_degenerate(const CorrespondenceCover& cover);

/// Stage-by-stage record of pack_complete.
struct CompleteTrace {
    int depth = 0;
    std::vector<int> rich_counts;
};

/// List packing of K_n (graph must be complete) where every colour lies in at
/// most k lists, 1 <= k <= n. Each stage picks a proper colouring that uses
/// every rich colour (a colour in exactly k of the current lists), removes it
/// from the lists and recurses with k - 1.
Packing pack_complete(const ListInstance& instance, CompleteTrace* trace = nullptr);

/// Bipartite list packing for k >= Delta_A + 1, where A is the side with the
/// smaller maximum degree. B takes the sorted packing c_i(b) = i-th smallest
/// colour of L(b); every a in A is then completed independently by a system
/// of distinct representatives. Throws PreconditionError when g is not
/// bipartite or k is too small.
Packing pack_bipartite_ordered(const ListInstance& instance);

/// Which side pack_bipartite_ordered treats as A: side[v] == 0 means v is in
/// A. Throws PreconditionError if g is not bipartite.
std::vector<int> ordered_sides(const Graph& g);

struct AugmentTrace {
    /// Assigned cells after each augmentation round; starts at 0.
    std::vector<int> coloured_cells;
};

/// Augmentation packer for k >= 1 + Delta + chi_c_bound, chi_c_bound a
/// certified upper bound on the correspondence chromatic number (pass a
/// negative value for 1 + degeneracy). Grows a partial packing one
/// augmentation at a time; each round colours the first uncoloured cell and
/// never uncolours a cell without colouring another in the same part.
Packing pack_augment(const CorrespondenceCover& cover, int chi_c_bound = -1, AugmentTrace* trace = nullptr);

}  // namespace listpack::constructive
