#include <catch_amalgamated.hpp>

#include "polycut/graph.hpp"

using namespace polycut;

TEST_CASE("edges are normalized and sorted", "[graph]")
{
    std::vector<Edge> in = {{2, 1}, {0, 3}, {1, 0}};
    for (Edge& e : in) {
        e = make_edge(e.u, e.v);
    }
    Graph g = Graph::from_edges(4, in);
    CHECK(g.num_edges() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(2, 3));
    CHECK(g.degree(0) == 2);
}

TEST_CASE("insertion order does not matter", "[graph]")
{
    std::vector<Edge> a = {{0, 1}, {1, 2}, {0, 2}};
    std::vector<Edge> b = {{0, 2}, {0, 1}, {1, 2}};
    CHECK(Graph::from_edges(3, a) == Graph::from_edges(3, b));
}

TEST_CASE("bad edge lists are rejected", "[graph]")
{
    std::vector<Edge> loop = {{1, 1}};
    std::vector<Edge> parallel = {{0, 1}, {0, 1}};
    std::vector<Edge> range = {{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, parallel), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, range), std::invalid_argument);
}

TEST_CASE("standard graphs", "[graph]")
{
    CHECK(complete_graph(5).num_edges() == 10);
    CHECK(path_graph(4).num_edges() == 3);
    CHECK(cycle_graph(6).num_edges() == 6);
    CHECK(is_connected(cycle_graph(6)));
    CHECK_FALSE(is_connected(Graph(2)));
}
