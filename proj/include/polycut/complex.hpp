#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycut/graph.hpp"

namespace polycut {

/// Sorted vertex list of one facet. A facet of a simplicial d-polytope has d vertices.
using Facet = std::vector<VertexId>;

/**
 * Boundary complex of a simplicial d-polytope, given by its facets.
 *
 * Facets are sorted on construction and the facet list is sorted and
 * deduplicated, so equality is equality of facet sets. Construction does not
 * check the structural invariants; use validate() for that.
 */
class BoundaryComplex
{
public:
    BoundaryComplex() = default;
    BoundaryComplex(int dim, int num_vertices, std::vector<Facet> facets);

    int dim() const { return dim_; }
    int num_vertices() const { return num_vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t num_facets() const { return facets_.size(); }

    /// `facet` must already be sorted.
    bool contains(const Facet& facet) const;

    bool operator==(const BoundaryComplex&) const = default;

private:
    int dim_ = 0;
    int num_vertices_ = 0;
    std::vector<Facet> facets_;
};

struct Violation
{
    /// One of: malformed-facet, unused-vertex, ridge-degree, dual-disconnected, min-degree.
    std::string kind;
    std::string detail;
    std::vector<VertexId> witness;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(std::string_view kind) const;
};

/**
 * Checks the pseudo-manifold proxy for polytopality: well-formed facets,
 * every vertex used, every ridge in exactly two facets, connected dual graph
 * and minimum skeleton degree at least dim.
 */
ValidationReport validate(const BoundaryComplex& c);

/// Edge {u,v} iff some facet contains both. Throws std::invalid_argument on an invalid complex.
Graph skeleton_graph(const BoundaryComplex& c);

struct FaceCounts
{
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t facets = 0;

    bool operator==(const FaceCounts&) const = default;
};

FaceCounts face_counts(const BoundaryComplex& c);

/// Renames vertex v to perm[v] and re-canonicalizes.
BoundaryComplex relabel(const BoundaryComplex& c, std::span<const VertexId> perm);

/// Binomial coefficient; exact for the small arguments used here.
long long binomial(long long n, long long k);

} // namespace polycut
