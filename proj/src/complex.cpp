#include "polycut/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polycut {

namespace {

std::string facet_string(const Facet& f)
{
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(f[i]);
    }
    return s + "}";
}

bool well_formed(const Facet& f, int dim, int n)
{
    if (static_cast<int>(f.size()) != dim) {
        return false;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] >= n || (i > 0 && f[i] == f[i - 1])) {
            return false;
        }
    }
    return true;
}

// Edges spanned by well-formed facets, without any validity requirement.
Graph raw_skeleton(const BoundaryComplex& c)
{
    std::set<Edge> edges;
    for (const Facet& f : c.facets()) {
        if (!well_formed(f, c.dim(), c.num_vertices())) {
            continue;
        }
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                edges.insert({f[i], f[j]});
            }
        }
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(c.num_vertices(), list);
}

} // namespace

BoundaryComplex::BoundaryComplex(int dim, int num_vertices, std::vector<Facet> facets)
    : dim_(dim), num_vertices_(num_vertices), facets_(std::move(facets))
{
    if (dim < 2) {
        throw std::invalid_argument("complex: dimension must be at least 2");
    }
    if (num_vertices < 0) {
        throw std::invalid_argument("complex: negative vertex count");
    }
    for (auto& f : facets_) {
        std::sort(f.begin(), f.end());
    }
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

bool BoundaryComplex::contains(const Facet& facet) const
{
    return std::binary_search(facets_.begin(), facets_.end(), facet);
}

bool ValidationReport::has(std::string_view kind) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind; });
}

ValidationReport validate(const BoundaryComplex& c)
{
    ValidationReport report;
    const int n = c.num_vertices();
    const int d = c.dim();

    std::vector<const Facet*> good;
    std::vector<char> used(n, 0);
    for (const Facet& f : c.facets()) {
        if (!well_formed(f, d, n)) {
            report.violations.push_back(
                {"malformed-facet", "facet " + facet_string(f) + " is not " + std::to_string(d) +
                                        " distinct vertices in range",
                 f});
            continue;
        }
        good.push_back(&f);
        for (VertexId v : f) {
            used[v] = 1;
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!used[v]) {
            report.violations.push_back(
                {"unused-vertex", "vertex " + std::to_string(v) + " lies in no facet", {v}});
        }
    }

    // Ridge multiplicities, plus the facets incident to each ridge for the dual graph.
    std::map<Facet, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < good.size(); ++i) {
        const Facet& f = *good[i];
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Facet ridge;
            ridge.reserve(f.size() - 1);
            for (std::size_t k = 0; k < f.size(); ++k) {
                if (k != skip) {
                    ridge.push_back(f[k]);
                }
            }
            ridges[ridge].push_back(i);
        }
    }
    for (const auto& [ridge, incident] : ridges) {
        if (incident.size() != 2) {
            report.violations.push_back({"ridge-degree",
                                         "ridge " + facet_string(ridge) + " lies in " +
                                             std::to_string(incident.size()) + " facets",
                                         ridge});
        }
    }

    if (!good.empty()) {
        std::vector<std::vector<std::size_t>> dual(good.size());
        for (const auto& [ridge, incident] : ridges) {
            for (std::size_t a = 0; a < incident.size(); ++a) {
                for (std::size_t b = a + 1; b < incident.size(); ++b) {
                    dual[incident[a]].push_back(incident[b]);
                    dual[incident[b]].push_back(incident[a]);
                }
            }
        }
        std::vector<char> seen(good.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : dual[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != good.size()) {
            const auto first_unreached = static_cast<std::size_t>(
                std::find(seen.begin(), seen.end(), 0) - seen.begin());
            report.violations.push_back(
                {"dual-disconnected",
                 "facet " + facet_string(*good[first_unreached]) +
                     " is not reachable from facet " + facet_string(*good[0]) +
                     " through shared ridges",
                 *good[first_unreached]});
        }
    }

    const Graph g = raw_skeleton(c);
    for (VertexId v = 0; v < n; ++v) {
        if (used[v] && g.degree(v) < d) {
            report.violations.push_back({"min-degree",
                                         "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(g.degree(v)) + " < " +
                                             std::to_string(d),
                                         {v}});
        }
    }
    return report;
}

Graph skeleton_graph(const BoundaryComplex& c)
{
    const ValidationReport report = validate(c);
    if (!report.ok()) {
        throw std::invalid_argument("skeleton_graph: invalid complex: " +
                                    report.violations.front().detail);
    }
    return raw_skeleton(c);
}

FaceCounts face_counts(const BoundaryComplex& c)
{
    const Graph g = skeleton_graph(c);
    return {static_cast<std::size_t>(c.num_vertices()), g.num_edges(), c.num_facets()};
}

BoundaryComplex relabel(const BoundaryComplex& c, std::span<const VertexId> perm)
{
    if (static_cast<int>(perm.size()) != c.num_vertices()) {
        throw std::invalid_argument("relabel: permutation size mismatch");
    }
    std::vector<Facet> facets;
    facets.reserve(c.num_facets());
    for (const Facet& f : c.facets()) {
        Facet g;
        g.reserve(f.size());
        for (VertexId v : f) {
            g.push_back(perm[v]);
        }
        facets.push_back(std::move(g));
    }
    return BoundaryComplex(c.dim(), c.num_vertices(), std::move(facets));
}

long long binomial(long long n, long long k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace polycut
