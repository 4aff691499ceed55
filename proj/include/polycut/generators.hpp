#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polycut/complex.hpp"

namespace polycut {

/// Boundary of the d-simplex on vertices 0..d.
BoundaryComplex simplex(int d);

/// Boundary of the d-dimensional cross-polytope; vertices i and i+d are antipodal.
BoundaryComplex cross_polytope(int d);

/**
 * Cyclic d-polytope with n vertices, ordered by moment-curve parameter.
 *
 * Facets are the d-subsets satisfying Gale's evenness condition: between any
 * two non-members lies an even number of members. Enumerated directly by
 * block structure, so the cost is proportional to the output.
 */
BoundaryComplex cyclic(int d, int n);

/// Replaces facet f by the cone over its boundary with apex n. Throws if f is not a facet.
BoundaryComplex stack(const BoundaryComplex& c, const Facet& f);

/// simplex(d) stacked n-d-1 times on uniformly chosen facets.
BoundaryComplex random_stacked(int d, int n, std::uint64_t seed);

struct LadderStacked
{
    BoundaryComplex complex;
    Facet first;  ///< {0..d-1}
    Facet second; ///< {d..2d-1}
};

/// Stacked d-polytope on 2d vertices with two disjoint facets, built by stacking along a sliding window.
LadderStacked ladder_stacked(int d);

/**
 * Bijection from the vertices of a facet of one complex onto the vertices of a
 * facet of another. pairs[i] = (vertex in first, vertex in second).
 */
struct GluingMap
{
    std::vector<std::pair<VertexId, VertexId>> pairs;

    /// Matches the i-th smallest vertex of `from` with the i-th smallest of `to`.
    static GluingMap order_preserving(const Facet& from, const Facet& to);
};

/**
 * Connected sum a # b along the facets identified by g.
 *
 * Labels of a are kept; the non-glued vertices of b follow in increasing
 * order. Both glued facets are removed.
 */
BoundaryComplex connected_sum(const BoundaryComplex& a, const BoundaryComplex& b,
                              const GluingMap& g);

struct WaistCertificate
{
    BoundaryComplex complex;
    std::vector<VertexId> left;  ///< first copy of the cyclic polytope, glued facet included
    std::vector<VertexId> right; ///< complement of left
    int expected_cut_size = 0;   ///< d(d+1)/2
};

/**
 * C # S # C where S = ladder_stacked(d) and C = cyclic(d, 1 + d(d+1)/2),
 * each copy of C glued along its lexicographically smallest facet. Requires d >= 4.
 */
WaistCertificate waist_polytope(int d);

class FlipBlocked : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/**
 * Diagonal flip in a 2-sphere triangulation: facets {u,v,x},{u,v,y} become
 * {x,y,u},{x,y,v}. Throws FlipBlocked when {x,y} is already an edge and
 * std::invalid_argument when {u,v} is not an edge of a dim-3 complex.
 */
BoundaryComplex flip(const BoundaryComplex& c, Edge e);

struct PlaneTriangulation
{
    BoundaryComplex complex;
    int flips_performed = 0;
};

/**
 * Random plane triangulation on v vertices: v-4 random stackings of the
 * tetrahedron followed by up to `flips` random diagonal flips. Blocked flips
 * are redrawn; after too many consecutive blocked draws the walk stops early.
 */
PlaneTriangulation random_plane_triangulation(int v, int flips, std::uint64_t seed);

} // namespace polycut
