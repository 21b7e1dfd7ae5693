#pragma once

#include "listpack/cover.hpp"

namespace listpack::generators {

/// C4 with lists {1,2}, {1,2}, {1,3}, {2,3} in cyclic order; it has no
/// list packing of size 2.
ListInstance gen_c4();

/// K_{d, ((2d-1)!)^(d-1)} with a (2d-1)-fold cover: A = {0..d-1}, the rest is
/// B. Every b is matched to vertex 0 by the identity and to the other A
/// vertices by one combination of permutations, each combination exactly
/// once. Supports d in {2, 3}.
CorrespondenceCover gen_kab_cover(int d);

/// d-degenerate graph with (d+1)-lists and no list packing. Layer 1 is
/// K_{d+1} with lists {1..d+1}; each next layer copies the previous one,
/// copy v' adjacent to every previous-layer vertex except v, with list
/// L(v) - {i} + {j}. Three shifts (a,d+2), (b,a), (d+2,b) swap colours a and
/// b, and d-1 swaps make a d-cycle. After d-1 cycles an apex with list
/// {1..d+1} is joined to vertex 1 of the layers that start each cycle.
/// Supports d in {2, 3}.
ListInstance gen_shift_construction(int d);

/// K_{b, b^b}: vertex i < b gets list {i*b+1 .. (i+1)*b}, the remaining b^b
/// vertices get every tuple of those lists in lexicographic order. No proper
/// colouring exists. Supports 1 <= b <= 3.
ListInstance gen_kbb_lists(int b);

/// Every list gains `extra` new colours, private to its vertex and larger
/// than every existing colour.
ListAssignment pad_with_fresh_colours(const ListAssignment& lists, int extra);

}  // namespace listpack::generators
