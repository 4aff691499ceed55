#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace polycut {

/// Vertices are contiguous indices 0..n-1 of the owning graph or complex.
using VertexId = int;

/// Undirected edge, stored with u < v.
struct Edge
{
    VertexId u = 0;
    VertexId v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Returns {min(a, b), max(a, b)}.
Edge make_edge(VertexId a, VertexId b);

/**
 * Undirected simple graph on vertices 0..n-1.
 *
 * Adjacency lists are kept sorted, so two graphs built from the same edge
 * set compare equal regardless of insertion order.
 */
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws std::invalid_argument on loops, parallel edges or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(VertexId a, VertexId b) const;

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t num_edges_ = 0;
};

bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

} // namespace polycut
