#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace listpack {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are normalised to (u, v) with u < v and kept sorted; every edge has
/// a stable index into edges(), which covers use to key their matchings.
class Graph {
  public:
    struct Incidence {
        Vertex neighbour;
        int edge;
    };

    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const Edge> edges() const& { return edges_; }
    std::span<const Edge> edges() const&& = delete;
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    std::span<const Incidence> incident(Vertex v) const& { return adjacency_[static_cast<std::size_t>(v)]; }
    std::span<const Incidence> incident(Vertex v) const&& = delete;
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    /// Index of edge uv in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

struct DegeneracyOrder {
    std::vector<Vertex> order;
    int degeneracy = 0;
};

/// Smallest-last ordering: every vertex has at most `degeneracy` neighbours
/// before it in `order`. Ties are broken towards the lowest vertex id.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Side (0 or 1) of every vertex, or nullopt if g has an odd cycle. Each
/// component puts its lowest vertex on side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int left, int right);

}  // namespace listpack
