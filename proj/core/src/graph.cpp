#include "listpack/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace listpack {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("graph: duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
    edges_ = std::move(edges);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adjacency_[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(e)});
        adjacency_[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(e)});
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        return -1;
    if (u > v)
        std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
        return -1;
    return static_cast<int>(it - edges_.begin());
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> remaining(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        remaining[static_cast<std::size_t>(v)] = g.degree(v);
        queue.insert({g.degree(v), v});
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    DegeneracyOrder result;
    result.order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        queue.erase(queue.begin());
        result.degeneracy = std::max(result.degeneracy, deg);
        removed[static_cast<std::size_t>(v)] = true;
        result.order.push_back(v);
        for (auto [w, e] : g.incident(v)) {
            if (removed[static_cast<std::size_t>(w)])
                continue;
            auto& r = remaining[static_cast<std::size_t>(w)];
            queue.erase({r, w});
            --r;
            queue.insert({r, w});
        }
    }
    // removal order has each vertex with <= d later neighbours
    std::reverse(result.order.begin(), result.order.end());
    return result;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] >= 0)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            Vertex v = frontier.front();
            frontier.pop();
            for (auto [w, e] : g.incident(v)) {
                auto& s = side[static_cast<std::size_t>(w)];
                if (s < 0) {
                    s = 1 - side[static_cast<std::size_t>(v)];
                    frontier.push(w);
                } else if (s == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (relabel[static_cast<std::size_t>(keep[i])] >= 0)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        relabel[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = relabel[static_cast<std::size_t>(u)], b = relabel[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0)
            edges.emplace_back(a, b);
    }
    return Graph(static_cast<int>(keep.size()), std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int left, int right) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < left; ++a)
        for (Vertex b = 0; b < right; ++b)
            edges.emplace_back(a, left + b);
    return Graph(left + right, std::move(edges));
}

}  // namespace listpack
