#include <catch_amalgamated.hpp>

#include "polycut/complex.hpp"
#include "polycut/generators.hpp"
#include "polycut/verify.hpp"

using namespace polycut;

TEST_CASE("plane suite", "[verify]")
{
    PlaneParams p;
    p.trials = 25;
    VerificationReport r = verify_plane(p);
    CHECK(r.passed());
    CHECK(r.instances == 27); // trials plus the octahedron and tetrahedron
    CHECK(r.to_json() == verify_plane(p).to_json());
    p.seed = 2;
    CHECK(verify_plane(p).passed());
}

TEST_CASE("plane instances are pure functions of their parameters", "[verify]")
{
    PlaneParams p;
    for (int t = 0; t < 20; ++t) {
        PlaneInstance a = plane_instance(p, t);
        CHECK(a.complex == plane_instance(p, t).complex);
        CHECK(a.complex.num_vertices() >= p.min_v);
        CHECK(a.complex.num_vertices() <= p.max_v);
        CHECK(a.flips_requested <= p.flip_factor * a.complex.num_vertices());
    }
}

TEST_CASE("lower bound theorem suite", "[verify]")
{
    LbtParams p;
    p.d_max = 5;
    p.n_max = 16;
    VerificationReport r = verify_lbt(p);
    CHECK(r.passed());
    CHECK(r.instances > 0);
}

TEST_CASE("balanced partitions", "[verify]")
{
    VerificationReport r3 = verify_balanced_partitions(3);
    CHECK(r3.passed());
    CHECK(r3.computed["ladder_canonical_crossing"] == 6);
    VerificationReport r4 = verify_balanced_partitions(4);
    CHECK(r4.passed());
    CHECK(r4.computed["ladder_canonical_crossing"] == 10);
    CHECK(r4.computed["ladder_stacked_min"] == 10);
    CHECK(r4.computed["ladder_stacked_partitions"] == 35);
    CHECK(r4.computed["cyclic_min"] == 16);
}

TEST_CASE("vertex-figure suite", "[verify]")
{
    VertexFigureParams p;
    p.trials = 10;
    VerificationReport r = verify_vertex_figure(p);
    CHECK(r.passed());
    CHECK(r.computed["new_edges_checked"].get<long long>() > 0);

    VertexFigureParams s;
    s.trials = 3;
    s.d = 3;
    s.n = 4;
    VerificationReport simplex_only = verify_vertex_figure(s);
    CHECK(simplex_only.passed());
    CHECK(simplex_only.skipped == 3);
}

TEST_CASE("cut suites on the brute-force corpus", "[verify]")
{
    std::vector<NamedGraph> corpus = brute_force_corpus();
    CHECK(corpus.size() >= 100);
    for (const NamedGraph& g : corpus) {
        CHECK(g.graph.num_vertices() <= 14);
        CHECK(is_connected(g.graph));
    }
    CHECK(verify_cut_oracle(corpus).passed());
    CHECK(verify_side_bound(corpus).passed());

    std::vector<NamedGraph> small = {{"C6", cycle_graph(6)}, {"K4", complete_graph(4)}};
    VerificationReport r = verify_side_bound(small);
    CHECK(r.passed());
    CHECK(r.computed["graphs_with_nontrivial_min_cut"] == 1);
}

TEST_CASE("main bound", "[verify]")
{
    VerificationReport oct = verify_main_bound(cross_polytope(3));
    CHECK(oct.passed());
    CHECK(oct.computed["min_nontrivial_cut"] == 6);
    CHECK(oct.computed["edge_connectivity"] == 4);

    VerificationReport cyc = verify_main_bound(cyclic(4, 11));
    CHECK(cyc.passed());
    CHECK(cyc.computed["min_nontrivial_cut"] == 18);

    VerificationReport waist = verify_main_bound(waist_polytope(5).complex);
    CHECK(waist.passed());
    CHECK(waist.computed["min_nontrivial_cut"] == 15);

    CHECK_THROWS_AS(verify_main_bound(BoundaryComplex(3, 4, {{0, 1, 2}})), std::invalid_argument);
}

TEST_CASE("waist reports", "[verify]")
{
    for (int d = 4; d <= 6; ++d) {
        VerificationReport r = verify_waist(d);
        const int bound = d * (d + 1) / 2;
        CAPTURE(d);
        CHECK(r.passed());
        CHECK(r.computed["min_degree"] == bound);
        CHECK(r.computed["certificate_cut"] == bound);
        CHECK(r.computed["min_nontrivial_cut"] == bound);
        CHECK(r.computed["edge_connectivity"] == bound);
    }
}

TEST_CASE("cyclic oracle", "[verify]")
{
    VerificationReport r = verify_cyclic_oracle(4, 8);
    CHECK(r.passed());
    CHECK(r.instances > 0);
}

TEST_CASE("report serialization", "[verify]")
{
    VerificationReport r = verify_waist(4);
    nlohmann::json j = r.to_json();
    CHECK(j["passed"] == true);
    CHECK(j["claim"] == r.claim);
    CHECK(j["failures"].is_array());
    std::vector<VerificationReport> rs = {r};
    std::string csv = reports_csv(rs);
    CHECK(csv.rfind("claim,instances,failures,min_observed,passed\n", 0) == 0);
    CHECK(csv.find(",10,true") != std::string::npos);
}
