#include "polycut/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polycut/random.hpp"

namespace polycut {

namespace {

void gale_blocks(int n, int d, int pos, int run_start, Facet& current, std::vector<Facet>& out)
{
    const int chosen = static_cast<int>(current.size());
    if (chosen > d || chosen + (n - pos) < d) {
        return;
    }
    if (pos == n) {
        out.push_back(current);
        return;
    }
    // Member at pos: extend the current block.
    current.push_back(pos);
    gale_blocks(n, d, pos + 1, run_start < 0 ? pos : run_start, current, out);
    current.pop_back();
    // Non-member at pos: closes the current block, which must be even unless it touches 0.
    if (run_start > 0 && (pos - run_start) % 2 != 0) {
        return;
    }
    gale_blocks(n, d, pos + 1, -1, current, out);
}

} // namespace

BoundaryComplex simplex(int d)
{
    if (d < 2) {
        throw std::invalid_argument("simplex: dimension must be at least 2");
    }
    std::vector<Facet> facets;
    for (int skip = 0; skip <= d; ++skip) {
        Facet f;
        for (int v = 0; v <= d; ++v) {
            if (v != skip) {
                f.push_back(v);
            }
        }
        facets.push_back(std::move(f));
    }
    return BoundaryComplex(d, d + 1, std::move(facets));
}

BoundaryComplex cross_polytope(int d)
{
    if (d < 2) {
        throw std::invalid_argument("cross_polytope: dimension must be at least 2");
    }
    std::vector<Facet> facets;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Facet f;
        for (int i = 0; i < d; ++i) {
            f.push_back((mask >> i) & 1u ? i + d : i);
        }
        facets.push_back(std::move(f));
    }
    return BoundaryComplex(d, 2 * d, std::move(facets));
}

BoundaryComplex cyclic(int d, int n)
{
    if (d < 2) {
        throw std::invalid_argument("cyclic: dimension must be at least 2");
    }
    if (n <= d) {
        throw std::invalid_argument("cyclic: need n >= d+1 vertices, got n = " + std::to_string(n));
    }
    std::vector<Facet> facets;
    Facet current;
    gale_blocks(n, d, 0, -1, current, facets);
    return BoundaryComplex(d, n, std::move(facets));
}

BoundaryComplex stack(const BoundaryComplex& c, const Facet& f)
{
    Facet sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (!c.contains(sorted)) {
        throw std::invalid_argument("stack: not a facet of the complex");
    }
    const VertexId apex = c.num_vertices();
    std::vector<Facet> facets;
    facets.reserve(c.num_facets() + sorted.size() - 1);
    for (const Facet& g : c.facets()) {
        if (g != sorted) {
            facets.push_back(g);
        }
    }
    for (std::size_t skip = 0; skip < sorted.size(); ++skip) {
        Facet g;
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            if (k != skip) {
                g.push_back(sorted[k]);
            }
        }
        g.push_back(apex);
        facets.push_back(std::move(g));
    }
    return BoundaryComplex(c.dim(), c.num_vertices() + 1, std::move(facets));
}

BoundaryComplex random_stacked(int d, int n, std::uint64_t seed)
{
    if (n <= d) {
        throw std::invalid_argument("random_stacked: need n >= d+1");
    }
    Rng rng(seed);
    BoundaryComplex c = simplex(d);
    while (c.num_vertices() < n) {
        const auto pick = uniform_int<std::size_t>(rng, 0, c.num_facets() - 1);
        const Facet f = c.facets()[pick];
        c = stack(c, f);
    }
    return c;
}

LadderStacked ladder_stacked(int d)
{
    BoundaryComplex c = simplex(d);
    // Stack on the window {j-d..j-1}; the new vertex j completes the next window.
    for (int j = d + 1; j < 2 * d; ++j) {
        Facet window;
        for (int v = j - d; v < j; ++v) {
            window.push_back(v);
        }
        c = stack(c, window);
    }
    Facet first, second;
    for (int v = 0; v < d; ++v) {
        first.push_back(v);
        second.push_back(d + v);
    }
    return {std::move(c), std::move(first), std::move(second)};
}

GluingMap GluingMap::order_preserving(const Facet& from, const Facet& to)
{
    if (from.size() != to.size()) {
        throw std::invalid_argument("gluing map: facet sizes differ");
    }
    Facet a = from, b = to;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    GluingMap g;
    for (std::size_t i = 0; i < a.size(); ++i) {
        g.pairs.emplace_back(a[i], b[i]);
    }
    return g;
}

BoundaryComplex connected_sum(const BoundaryComplex& a, const BoundaryComplex& b,
                              const GluingMap& g)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("connected_sum: dimension mismatch");
    }
    const int d = a.dim();
    if (static_cast<int>(g.pairs.size()) != d) {
        throw std::invalid_argument("connected_sum: gluing map must pair exactly d vertices");
    }
    Facet fa, fb;
    for (const auto& [x, y] : g.pairs) {
        fa.push_back(x);
        fb.push_back(y);
    }
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    if (std::adjacent_find(fa.begin(), fa.end()) != fa.end() ||
        std::adjacent_find(fb.begin(), fb.end()) != fb.end()) {
        throw std::invalid_argument("connected_sum: gluing map is not a bijection");
    }
    if (!a.contains(fa) || !b.contains(fb)) {
        throw std::invalid_argument("connected_sum: gluing map does not pair two facets");
    }

    std::vector<VertexId> image(b.num_vertices(), -1);
    for (const auto& [x, y] : g.pairs) {
        image[y] = x;
    }
    VertexId next = a.num_vertices();
    for (VertexId v = 0; v < b.num_vertices(); ++v) {
        if (image[v] < 0) {
            image[v] = next++;
        }
    }

    std::vector<Facet> facets;
    facets.reserve(a.num_facets() + b.num_facets() - 2);
    for (const Facet& f : a.facets()) {
        if (f != fa) {
            facets.push_back(f);
        }
    }
    for (const Facet& f : b.facets()) {
        if (f == fb) {
            continue;
        }
        Facet h;
        h.reserve(f.size());
        for (VertexId v : f) {
            h.push_back(image[v]);
        }
        facets.push_back(std::move(h));
    }
    return BoundaryComplex(d, next, std::move(facets));
}

WaistCertificate waist_polytope(int d)
{
    if (d < 4) {
        throw std::invalid_argument("waist_polytope: requires d >= 4, got d = " + std::to_string(d));
    }
    const int half = d * (d + 1) / 2;
    const BoundaryComplex cyc = cyclic(d, 1 + half);
    const Facet& glue = cyc.facets().front();
    const LadderStacked ladder = ladder_stacked(d);

    const BoundaryComplex first =
        connected_sum(cyc, ladder.complex, GluingMap::order_preserving(glue, ladder.first));
    // The ladder's far facet now occupies the labels right after the first copy.
    const int m = cyc.num_vertices();
    Facet far;
    for (int i = 0; i < d; ++i) {
        far.push_back(m + i);
    }
    BoundaryComplex whole = connected_sum(first, cyc, GluingMap::order_preserving(far, glue));

    WaistCertificate cert;
    for (VertexId v = 0; v < whole.num_vertices(); ++v) {
        (v < m ? cert.left : cert.right).push_back(v);
    }
    cert.complex = std::move(whole);
    cert.expected_cut_size = half;
    return cert;
}

BoundaryComplex flip(const BoundaryComplex& c, Edge e)
{
    if (c.dim() != 3) {
        throw std::invalid_argument("flip: only defined for 2-sphere triangulations (dim 3)");
    }
    const Edge uv = make_edge(e.u, e.v);
    std::vector<VertexId> apexes;
    bool xy_edge = false;
    for (const Facet& f : c.facets()) {
        const bool has_u = std::binary_search(f.begin(), f.end(), uv.u);
        const bool has_v = std::binary_search(f.begin(), f.end(), uv.v);
        if (has_u && has_v) {
            for (VertexId w : f) {
                if (w != uv.u && w != uv.v) {
                    apexes.push_back(w);
                }
            }
        }
    }
    if (apexes.size() != 2) {
        throw std::invalid_argument("flip: {" + std::to_string(uv.u) + "," +
                                    std::to_string(uv.v) + "} is not a ridge of two facets");
    }
    const VertexId x = apexes[0], y = apexes[1];
    for (const Facet& f : c.facets()) {
        if (std::binary_search(f.begin(), f.end(), x) && std::binary_search(f.begin(), f.end(), y)) {
            xy_edge = true;
            break;
        }
    }
    if (xy_edge) {
        throw FlipBlocked("flip: {" + std::to_string(x) + "," + std::to_string(y) +
                          "} is already an edge");
    }
    std::vector<Facet> facets;
    facets.reserve(c.num_facets());
    for (const Facet& f : c.facets()) {
        const bool has_u = std::binary_search(f.begin(), f.end(), uv.u);
        const bool has_v = std::binary_search(f.begin(), f.end(), uv.v);
        if (!(has_u && has_v)) {
            facets.push_back(f);
        }
    }
    facets.push_back({x, y, uv.u});
    facets.push_back({x, y, uv.v});
    return BoundaryComplex(3, c.num_vertices(), std::move(facets));
}

PlaneTriangulation random_plane_triangulation(int v, int flips, std::uint64_t seed)
{
    if (v < 4) {
        throw std::invalid_argument("random_plane_triangulation: need v >= 4");
    }
    constexpr int kMaxBlockedDraws = 64;
    Rng rng(seed);
    BoundaryComplex c = simplex(3);
    while (c.num_vertices() < v) {
        const auto pick = uniform_int<std::size_t>(rng, 0, c.num_facets() - 1);
        const Facet f = c.facets()[pick];
        c = stack(c, f);
    }

    int performed = 0;
    int blocked = 0;
    while (performed < flips && blocked < kMaxBlockedDraws) {
        std::set<Edge> edge_set;
        for (const Facet& f : c.facets()) {
            edge_set.insert({f[0], f[1]});
            edge_set.insert({f[0], f[2]});
            edge_set.insert({f[1], f[2]});
        }
        const std::vector<Edge> edges(edge_set.begin(), edge_set.end());
        const Edge e = edges[uniform_int<std::size_t>(rng, 0, edges.size() - 1)];
        try {
            c = flip(c, e);
            ++performed;
            blocked = 0;
        } catch (const FlipBlocked&) {
            ++blocked;
        }
    }
    return {std::move(c), performed};
}

} // namespace polycut
