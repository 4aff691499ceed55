#include <catch_amalgamated.hpp>

#include "polycut/complex.hpp"
#include "polycut/generators.hpp"
#include "polycut/io.hpp"

using namespace polycut;

namespace {

int parse_error_line(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("complex round trips", "[io]")
{
    for (const BoundaryComplex& c : {simplex(3), cross_polytope(4), cyclic(5, 9), ladder_stacked(3).complex}) {
        CHECK(parse_complex(write_complex_json(c)) == c);
        CHECK(parse_complex(write_complex_text(c)) == c);
    }
}

TEST_CASE("complex JSON layout", "[io]")
{
    CHECK(write_complex_json(simplex(2)) == "{\"dim\":2,\"facets\":[[0,1],[0,2],[1,2]],\"n\":3}\n");
    CHECK(write_complex_text(simplex(2)) == "2 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("complex text tolerates blank lines", "[io]")
{
    BoundaryComplex c = parse_complex("2 3\n\n1 0\n0 2\n2 1\n");
    CHECK(c == simplex(2));
}

TEST_CASE("complex parse errors carry line numbers", "[io]")
{
    CHECK(parse_error_line([] { parse_complex("2 3\n0 1\n0 x\n1 2\n"); }) == 3);
    CHECK(parse_error_line([] { parse_complex("2 3\n0 1\n0 5\n"); }) == 3);
    CHECK(parse_error_line([] { parse_complex("2 3\n0 1 2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_complex(""); }) >= 0);
    CHECK_THROWS_AS(parse_complex("{\"dim\":2,\"n\":3}"), ParseError);
    CHECK_THROWS_AS(parse_complex("{\"dim\":2,\"n\":3,\"facets\":[[0,7]]}"), ParseError);
    CHECK_THROWS_AS(parse_complex("{not json"), ParseError);
    try {
        parse_complex("2 3\n0 1\n0 x\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
}

TEST_CASE("graph round trip and errors", "[io]")
{
    Graph g = skeleton_graph(cross_polytope(3));
    std::string text = write_graph_text(g);
    CHECK(text.rfind("6 12\n0 1\n", 0) == 0);
    CHECK(parse_graph(text) == g);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n"); }) >= 0);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n1 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n1 0\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n1 3\n"); }) == 3);
}

TEST_CASE("points round trip and errors", "[io]")
{
    PointConfiguration c = parse_points("2 3\n0 0\n1/2 -3\n7 2/6\n");
    REQUIRE(c.size() == 3);
    CHECK(c.dim == 2);
    CHECK(c.points[1][0] == Rational(1, 2));
    CHECK(c.points[2][1] == Rational(1, 3));
    CHECK(parse_points(write_points_text(c)).points == c.points);
    CHECK(parse_error_line([] { parse_points("2 2\n0 0\n1/0 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_points("2 2\n0 0\n1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_points("2 2\n0 0\n"); }) >= 0);
}

TEST_CASE("cut JSON", "[io]")
{
    Cut c{{0}, {{0, 1}, {0, 2}}, true};
    CHECK(dump_line(cut_to_json(c)) ==
          "{\"crossing\":[[0,1],[0,2]],\"side\":[0],\"size\":2,\"trivial\":true}\n");
}
