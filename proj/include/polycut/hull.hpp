#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "polycut/complex.hpp"

namespace polycut {

using Rational = boost::multiprecision::mpq_rational;
using RationalPoint = std::vector<Rational>;

struct PointConfiguration
{
    int dim = 0;
    std::vector<RationalPoint> points;

    int size() const { return static_cast<int>(points.size()); }
};

/// Configuration is degenerate where a general-position input is required.
class DegenerateConfiguration : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact determinant by fraction-carrying Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/**
 * Sign of det[p1 - p0, ..., pd - p0] for d+1 points of dimension d.
 * Zero iff the points are affinely dependent.
 */
int orientation(std::span<const RationalPoint> points);

/// True iff every (d+1)-subset is affinely independent.
bool in_general_position(const PointConfiguration& c);

struct HullResult
{
    BoundaryComplex complex;            ///< relabeled to hull vertices only
    std::vector<int> hull_vertices;     ///< input index of each complex vertex, increasing
    std::vector<int> interior_points;   ///< input indices that are not hull vertices
};

/**
 * Facets of conv(c) by checking every d-subset: S spans a facet iff all other
 * points lie strictly on one side of its hyperplane. Throws
 * DegenerateConfiguration unless c is in general position.
 */
HullResult facets_brute_force(const PointConfiguration& c);

/// Points (t, t^2, ..., t^d) for t in params (default 1..n).
PointConfiguration moment_curve_points(int d, int n,
                                       const std::optional<std::vector<long>>& params = std::nullopt);

class ResamplingExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * n integer points uniform in [-box, box]^d, rejecting any draw that would make
 * some (d+1)-subset affinely dependent. Deterministic per seed. Throws
 * ResamplingExhausted when a point cannot be placed within the retry budget.
 */
PointConfiguration random_general_position(int d, int n, std::uint64_t seed, long box);

struct LemmaViolation
{
    int u = 0;
    int v = 0;
    int w = 0;

    bool operator==(const LemmaViolation&) const = default;
};

/**
 * Removes hull vertex w and, for every edge {u,v} of conv(V \ {w}) that is not an
 * edge of conv(V), checks that {u,w} and {v,w} are edges of conv(V). V is the
 * set of hull vertices of c. Indices refer to c. Returns the violating triples.
 */
std::vector<LemmaViolation> check_vertex_figure_lemma(const PointConfiguration& c, int w);

struct VertexFigureCheck
{
    std::vector<LemmaViolation> violations;
    std::vector<Edge> new_edges; ///< edges of conv(V \ {w}) that are not edges of conv(V)
};

/// check_vertex_figure_lemma plus the new edges it inspected.
VertexFigureCheck vertex_figure_check(const PointConfiguration& c, int w);

/// Undirected edge set of the hull, in input indices of c.
std::vector<Edge> hull_edges(const PointConfiguration& c);

} // namespace polycut
