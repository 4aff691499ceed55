#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polycut/graph.hpp"

namespace polycut {

/**
 * Edge cut E(X, X̄) of a vertex bipartition.
 *
 * `side` is the canonical side: the smaller part, or the part containing
 * vertex 0 when both parts have equal size.
 */
struct Cut
{
    std::vector<VertexId> side;
    std::vector<Edge> crossing;
    bool trivial = false;

    std::size_t size() const { return crossing.size(); }

    bool operator==(const Cut&) const = default;
};

int min_degree(const Graph& g);

/// Cut of the bipartition (X, V \ X). Throws std::invalid_argument if X is empty, full or out of range.
Cut crossing_edges(const Graph& g, std::span<const VertexId> side);

/// Stoer-Wagner minimum cut. Throws std::invalid_argument on disconnected input or n < 2.
Cut global_min_cut(const Graph& g);

/**
 * Minimum cut among bipartitions with both sides of size >= 2.
 *
 * Fixes vertex 0 and, for every other vertex v and every pair {x, y} avoiding
 * both, computes a unit-capacity max flow from {0, v} to {x, y}. Flows are
 * only pushed until they reach the best cut found so far, and the search
 * stops once the best equals the global edge connectivity, which is a lower
 * bound for every nontrivial cut. Returns nullopt when n < 4; throws on
 * disconnected input.
 */
std::optional<Cut> min_nontrivial_cut(const Graph& g);

struct BruteForceCuts
{
    Cut min_cut;
    std::optional<Cut> min_nontrivial;
};

inline constexpr int kBruteForceMaxVertices = 16;

/// Exhaustive enumeration over all 2^(n-1) - 1 bipartitions. Requires 2 <= n <= 16.
BruteForceCuts brute_force_cuts(const Graph& g);

/**
 * Calls `visit(side_mask, crossing_count)` for each bipartition, where side_mask
 * is the part containing vertex 0 (bit v set for v in the part). Requires n <= 16.
 */
void for_each_bipartition(const Graph& g,
                          const std::function<void(std::uint32_t, int)>& visit);

/// Smallest crossing count over bipartitions with both sides of size >= k, by enumeration. n <= 16.
std::optional<Cut> brute_force_min_cut_with_sides(const Graph& g, int k);

/// Vertex list of a bit mask.
std::vector<VertexId> mask_to_vertices(std::uint32_t mask, int n);

} // namespace polycut
