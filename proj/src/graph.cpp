#include "polycut/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polycut {

Edge make_edge(VertexId a, VertexId b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n)
{
    if (n < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw std::invalid_argument("graph: edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} out of range");
        }
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::invalid_argument("graph: parallel edge");
        }
    }
    g.num_edges_ = edges.size();
    return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const
{
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < num_vertices(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

bool is_connected(const Graph& g)
{
    const int n = g.num_vertices();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (VertexId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) {
        edges.push_back({u, u + 1});
    }
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        edges.push_back(make_edge(u, (u + 1) % n));
    }
    return Graph::from_edges(n, edges);
}

} // namespace polycut
