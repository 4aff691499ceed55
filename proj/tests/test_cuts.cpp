#include <catch_amalgamated.hpp>

#include <random>

#include "polycut/complex.hpp"
#include "polycut/cuts.hpp"
#include "polycut/generators.hpp"
#include "support/oracles.hpp"

using namespace polycut;

namespace {

struct Minima
{
    int global = 1 << 30;
    int nontrivial = 1 << 30; // both sides >= 2
};

// Enumerates masks directly and counts crossings pair by pair.
Minima enumerate(const Graph& g)
{
    const int n = g.num_vertices();
    Minima m;
    for (unsigned mask = 1; mask < (1u << n) - 1; ++mask) {
        if (mask & 1u) {
            continue; // complement already visited
        }
        std::vector<VertexId> side;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1u) {
                side.push_back(v);
            }
        }
        int c = testing::crossing_count(g, side);
        m.global = std::min(m.global, c);
        int k = static_cast<int>(side.size());
        if (k >= 2 && n - k >= 2) {
            m.nontrivial = std::min(m.nontrivial, c);
        }
    }
    return m;
}

Graph random_connected(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({static_cast<VertexId>(std::uniform_int_distribution<int>(0, v - 1)(rng)), v});
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Edge e{u, v};
            if (coin(rng) && std::find(edges.begin(), edges.end(), e) == edges.end()) {
                edges.push_back(e);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("global minimum cut on small graphs", "[cuts]")
{
    Cut p3 = global_min_cut(path_graph(3));
    CHECK(p3.size() == 1);
    CHECK(p3.side.size() == 1);
    CHECK(p3.trivial);

    CHECK(global_min_cut(complete_graph(4)).size() == 3);
    CHECK(global_min_cut(cycle_graph(7)).size() == 2);

    Graph oct = skeleton_graph(cross_polytope(3));
    Cut c = global_min_cut(oct);
    CHECK(c.size() == 4);
    CHECK(c.trivial);
}

TEST_CASE("minimum nontrivial cut on small graphs", "[cuts]")
{
    Graph oct = skeleton_graph(cross_polytope(3));
    std::optional<Cut> c = min_nontrivial_cut(oct);
    REQUIRE(c);
    CHECK(c->size() == 6);
    CHECK_FALSE(c->trivial);
    CHECK(c->side.size() >= 2);
    CHECK(testing::crossing_count(oct, c->side) == 6);

    CHECK(min_nontrivial_cut(complete_graph(5))->size() == 6);
    CHECK(min_nontrivial_cut(path_graph(4))->size() == 1);
    CHECK_FALSE(min_nontrivial_cut(complete_graph(3)).has_value());
    CHECK_THROWS_AS(min_nontrivial_cut(Graph(4)), std::invalid_argument);
}

TEST_CASE("brute force on small graphs", "[cuts]")
{
    BruteForceCuts k4 = brute_force_cuts(complete_graph(4));
    CHECK(k4.min_cut.size() == 3);
    REQUIRE(k4.min_nontrivial);
    CHECK(k4.min_nontrivial->size() == 4);

    BruteForceCuts p4 = brute_force_cuts(path_graph(4));
    CHECK(p4.min_cut.size() == 1);
    CHECK(p4.min_nontrivial->size() == 1);

    CHECK_THROWS(brute_force_cuts(complete_graph(17)));
}

TEST_CASE("crossing edges of an explicit side", "[cuts]")
{
    LadderStacked l = ladder_stacked(4);
    Graph g = skeleton_graph(l.complex);
    std::vector<VertexId> x = {0, 1, 2, 3};
    Cut c = crossing_edges(g, x);
    CHECK(c.size() == 10);
    CHECK(c.side == x); // equal halves: side holding vertex 0
    CHECK_FALSE(c.trivial);

    std::vector<VertexId> big = {0, 1, 2, 3, 4, 5, 6};
    Cut d = crossing_edges(g, big);
    CHECK(d.side == std::vector<VertexId>{7});
    CHECK(d.trivial);
    CHECK(static_cast<int>(d.size()) == g.degree(7));

    std::vector<VertexId> empty;
    std::vector<VertexId> out_of_range = {9};
    CHECK_THROWS(crossing_edges(g, empty));
    CHECK_THROWS(crossing_edges(g, out_of_range));
}

TEST_CASE("minimum cut with both sides at least k", "[cuts]")
{
    Graph oct = skeleton_graph(cross_polytope(3));
    CHECK(brute_force_min_cut_with_sides(oct, 3)->size() == 6);
    std::vector<VertexId> facet = {0, 1, 2};
    CHECK(crossing_edges(oct, facet).size() == 6);
    CHECK(brute_force_min_cut_with_sides(oct, 2)->size() == 6);
    CHECK_FALSE(brute_force_min_cut_with_sides(oct, 4).has_value());
}

TEST_CASE("bipartition enumeration visits each split once", "[cuts]")
{
    Graph g = cycle_graph(6);
    int visits = 0;
    for_each_bipartition(g, [&](std::uint32_t mask, int crossing) {
        ++visits;
        CHECK((mask & 1u));
        CHECK(crossing == testing::crossing_count(g, mask_to_vertices(mask, 6)));
    });
    CHECK(visits == (1 << 5) - 1);
}

TEST_CASE("flow-based minima agree with enumeration on random graphs", "[cuts]")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + trial % 9;
        double p = 0.1 + 0.1 * (trial % 7);
        Graph g = random_connected(n, p, rng);
        CAPTURE(trial, n, g.num_edges());
        Minima m = enumerate(g);
        Cut global = global_min_cut(g);
        CHECK(static_cast<int>(global.size()) == m.global);
        CHECK(testing::crossing_count(g, global.side) == m.global);
        std::optional<Cut> nt = min_nontrivial_cut(g);
        REQUIRE(nt);
        CHECK(static_cast<int>(nt->size()) == m.nontrivial);
        CHECK(testing::crossing_count(g, nt->side) == m.nontrivial);
        CHECK(nt->side.size() >= 2);
        CHECK(g.num_vertices() - nt->side.size() >= 2);
        BruteForceCuts bf = brute_force_cuts(g);
        CHECK(static_cast<int>(bf.min_cut.size()) == m.global);
        CHECK(static_cast<int>(bf.min_nontrivial->size()) == m.nontrivial);
    }
}

TEST_CASE("flow-based minima agree with enumeration on polytope skeletons", "[cuts]")
{
    std::vector<BoundaryComplex> cs = {cross_polytope(3), cross_polytope(4), cyclic(3, 9), cyclic(4, 10),
                                       ladder_stacked(5).complex, random_stacked(3, 12, 4),
                                       random_plane_triangulation(13, 30, 2).complex};
    for (const BoundaryComplex& c : cs) {
        Graph g = skeleton_graph(c);
        Minima m = enumerate(g);
        CHECK(static_cast<int>(global_min_cut(g).size()) == m.global);
        CHECK(static_cast<int>(min_nontrivial_cut(g)->size()) == m.nontrivial);
    }
}
