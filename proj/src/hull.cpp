#include "polycut/hull.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polycut/combinations.hpp"
#include "polycut/random.hpp"

namespace polycut {

namespace {

int sign(const Rational& x)
{
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

void require_dimensions(const PointConfiguration& c)
{
    if (c.dim < 1) {
        throw std::invalid_argument("point configuration: dimension must be positive");
    }
    for (const auto& p : c.points) {
        if (static_cast<int>(p.size()) != c.dim) {
            throw std::invalid_argument("point configuration: point of dimension " +
                                        std::to_string(p.size()) + " in a dimension " +
                                        std::to_string(c.dim) + " configuration");
        }
    }
}

int rank(std::vector<std::vector<Rational>> m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col] == 0) {
                continue;
            }
            const Rational factor = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                m[i][j] -= factor * m[r][j];
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

bool affinely_independent(const std::vector<const RationalPoint*>& pts)
{
    if (pts.size() <= 1) {
        return true;
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(pts[i]->size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = (*pts[i])[j] - (*pts[0])[j];
        }
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows)) == static_cast<int>(pts.size()) - 1;
}

} // namespace

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) {
                continue;
            }
            const Rational factor = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) {
                m[i][j] -= factor * m[col][j];
            }
        }
    }
    return det;
}

int orientation(std::span<const RationalPoint> points)
{
    if (points.size() < 2) {
        throw std::invalid_argument("orientation: need d+1 points with d >= 1");
    }
    const std::size_t d = points.size() - 1;
    for (const auto& p : points) {
        if (p.size() != d) {
            throw std::invalid_argument("orientation: expected " + std::to_string(d + 1) +
                                        " points of dimension " + std::to_string(d));
        }
    }
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m[i][j] = points[i + 1][j] - points[0][j];
        }
    }
    return sign(determinant(std::move(m)));
}

bool in_general_position(const PointConfiguration& c)
{
    require_dimensions(c);
    bool ok = true;
    std::vector<RationalPoint> subset(c.dim + 1);
    for_each_combination(c.size(), c.dim + 1, [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            subset[i] = c.points[idx[i]];
        }
        ok = orientation(subset) != 0;
        return ok;
    });
    return ok;
}

HullResult facets_brute_force(const PointConfiguration& c)
{
    require_dimensions(c);
    const int d = c.dim;
    const int n = c.size();
    if (d < 2) {
        throw std::invalid_argument("facets_brute_force: dimension must be at least 2");
    }
    if (n < d + 1) {
        throw DegenerateConfiguration("facets_brute_force: need at least d+1 points");
    }
    if (!in_general_position(c)) {
        throw DegenerateConfiguration("facets_brute_force: configuration is not in general position");
    }

    std::vector<Facet> facets;
    std::vector<std::vector<Rational>> rows(d - 1, std::vector<Rational>(d));
    std::vector<Rational> normal(d);
    for_each_combination(n, d, [&](const std::vector<int>& s) {
        const RationalPoint& base = c.points[s[0]];
        for (int i = 1; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                rows[i - 1][j] = c.points[s[i]][j] - base[j];
            }
        }
        // Cofactor expansion of the orientation determinant along its last row.
        for (int col = 0; col < d; ++col) {
            std::vector<std::vector<Rational>> minor(d - 1, std::vector<Rational>(d - 1));
            for (int i = 0; i < d - 1; ++i) {
                for (int j = 0, k = 0; j < d; ++j) {
                    if (j != col) {
                        minor[i][k++] = rows[i][j];
                    }
                }
            }
            normal[col] = determinant(std::move(minor));
            if ((d - 1 + col) % 2 != 0) {
                normal[col] = -normal[col];
            }
        }
        int side = 0;
        bool facet = true;
        std::size_t next = 0;
        for (int p = 0; p < n && facet; ++p) {
            if (next < s.size() && s[next] == p) {
                ++next;
                continue;
            }
            Rational dot = 0;
            for (int j = 0; j < d; ++j) {
                dot += (c.points[p][j] - base[j]) * normal[j];
            }
            const int sg = sign(dot);
            if (side == 0) {
                side = sg;
            } else if (sg != side) {
                facet = false;
            }
        }
        if (facet) {
            facets.emplace_back(s.begin(), s.end());
        }
        return true;
    });

    std::vector<int> relabel(n, -1);
    HullResult out;
    for (const Facet& f : facets) {
        for (VertexId v : f) {
            relabel[v] = 0;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (relabel[i] == 0) {
            relabel[i] = static_cast<int>(out.hull_vertices.size());
            out.hull_vertices.push_back(i);
        } else {
            out.interior_points.push_back(i);
        }
    }
    for (Facet& f : facets) {
        for (VertexId& v : f) {
            v = relabel[v];
        }
    }
    out.complex = BoundaryComplex(d, static_cast<int>(out.hull_vertices.size()), std::move(facets));
    return out;
}

PointConfiguration moment_curve_points(int d, int n, const std::optional<std::vector<long>>& params)
{
    if (d < 1 || n < 0) {
        throw std::invalid_argument("moment_curve_points: invalid dimension or count");
    }
    std::vector<long> ts;
    if (params) {
        ts = *params;
        if (static_cast<int>(ts.size()) != n) {
            throw std::invalid_argument("moment_curve_points: expected " + std::to_string(n) +
                                        " parameters");
        }
        std::vector<long> sorted = ts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("moment_curve_points: repeated parameter");
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            ts.push_back(i);
        }
    }
    PointConfiguration c{d, {}};
    for (long t : ts) {
        RationalPoint p;
        Rational power = 1;
        for (int k = 0; k < d; ++k) {
            power *= t;
            p.push_back(power);
        }
        c.points.push_back(std::move(p));
    }
    return c;
}

PointConfiguration random_general_position(int d, int n, std::uint64_t seed, long box)
{
    if (d < 1 || n < d + 1) {
        throw std::invalid_argument("random_general_position: need d >= 1 and n >= d+1");
    }
    if (box < 0) {
        throw std::invalid_argument("random_general_position: box must be non-negative");
    }
    constexpr int kDrawsPerPoint = 1000;
    Rng rng(seed);
    PointConfiguration c{d, {}};
    for (int k = 0; k < n; ++k) {
        bool placed = false;
        for (int draw = 0; draw < kDrawsPerPoint && !placed; ++draw) {
            RationalPoint p;
            for (int j = 0; j < d; ++j) {
                p.emplace_back(uniform_int<long>(rng, -box, box));
            }
            // Every (d+1)-subset (or the whole set, while smaller) through p must be independent.
            const int others = std::min(k, d);
            bool ok = true;
            for_each_combination(k, others, [&](const std::vector<int>& idx) {
                std::vector<const RationalPoint*> pts;
                for (int i : idx) {
                    pts.push_back(&c.points[i]);
                }
                pts.push_back(&p);
                ok = affinely_independent(pts);
                return ok;
            });
            if (ok) {
                c.points.push_back(std::move(p));
                placed = true;
            }
        }
        if (!placed) {
            throw ResamplingExhausted("random_general_position: could not place point " +
                                      std::to_string(k) + " in box " + std::to_string(box) +
                                      "; enlarge the box");
        }
    }
    return c;
}

std::vector<Edge> hull_edges(const PointConfiguration& c)
{
    const HullResult hull = facets_brute_force(c);
    std::vector<Edge> edges;
    for (const Edge& e : skeleton_graph(hull.complex).edges()) {
        edges.push_back(make_edge(hull.hull_vertices[e.u], hull.hull_vertices[e.v]));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<LemmaViolation> check_vertex_figure_lemma(const PointConfiguration& c, int w)
{
    return vertex_figure_check(c, w).violations;
}

VertexFigureCheck vertex_figure_check(const PointConfiguration& c, int w)
{
    const HullResult hull = facets_brute_force(c);
    const auto& verts = hull.hull_vertices;
    if (!std::binary_search(verts.begin(), verts.end(), w)) {
        throw std::invalid_argument("check_vertex_figure_lemma: point " + std::to_string(w) +
                                    " is not a hull vertex");
    }
    if (static_cast<int>(verts.size()) < c.dim + 2) {
        throw std::invalid_argument("check_vertex_figure_lemma: hull needs at least d+2 vertices");
    }

    std::set<Edge> full;
    for (const Edge& e : skeleton_graph(hull.complex).edges()) {
        full.insert(make_edge(verts[e.u], verts[e.v]));
    }

    PointConfiguration reduced{c.dim, {}};
    std::vector<int> original;
    for (int v : verts) {
        if (v != w) {
            reduced.points.push_back(c.points[v]);
            original.push_back(v);
        }
    }
    VertexFigureCheck out;
    for (const Edge& e : hull_edges(reduced)) {
        const Edge uv = make_edge(original[e.u], original[e.v]);
        if (full.count(uv)) {
            continue;
        }
        out.new_edges.push_back(uv);
        if (!full.count(make_edge(uv.u, w)) || !full.count(make_edge(uv.v, w))) {
            out.violations.push_back({uv.u, uv.v, w});
        }
    }
    return out;
}

} // namespace polycut
