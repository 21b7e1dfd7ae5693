#pragma once

#include "listpack/cover.hpp"
#include "listpack/rng.hpp"

namespace listpack::sample {

/// G(n, p).
Graph random_graph(int n, double p, CounterRng& rng);
/// Bipartite graph on left + right vertices (left side first), each cross
/// pair present with probability p.
Graph random_bipartite_graph(int left, int right, double p, CounterRng& rng);
/// Bipartite graph with `side` vertices per side built from `degree` random
/// perfect matchings, repeated pairs dropped; every degree is at most `degree`.
Graph random_bipartite_regularish(int side, int degree, CounterRng& rng);

/// Uniform random permutation matching on every edge (full cover), or, with
/// `full` false, each pair of such a matching kept with probability 1/2.
CorrespondenceCover random_cover(const Graph& g, int k, CounterRng& rng, bool full = true);

/// Each vertex gets k distinct colours drawn uniformly from 0..palette-1.
ListAssignment random_lists(int n, int k, int palette, CounterRng& rng);

/// k-lists for n vertices in which every colour lies in at most k lists,
/// using n + k - 1 colours so that many colours are rich.
ListAssignment random_bounded_lists(int n, int k, CounterRng& rng);

}  // namespace listpack::sample
