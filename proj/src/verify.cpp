#include "polycut/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "polycut/combinations.hpp"
#include "polycut/generators.hpp"
#include "polycut/io.hpp"
#include "polycut/random.hpp"

namespace polycut {

namespace {

using nlohmann::json;

json partition_witness(const std::string& instance, const BoundaryComplex* c, const Graph& g,
                       const std::vector<VertexId>& side, const std::string& reason)
{
    json w = {{"instance", instance}, {"reason", reason}, {"side", side}};
    if (c != nullptr) {
        w["complex"] = complex_to_json(*c);
    } else {
        w["graph"] = write_graph_text(g);
    }
    return w;
}

json complex_witness(const std::string& instance, const BoundaryComplex& c, const std::string& reason)
{
    return {{"instance", instance}, {"reason", reason}, {"complex", complex_to_json(c)}};
}

void track_min(json& computed, const char* key, long long value)
{
    if (!computed.contains(key) || computed[key].get<long long>() > value) {
        computed[key] = value;
    }
}

void track_max(json& computed, const char* key, long long value)
{
    if (!computed.contains(key) || computed[key].get<long long>() < value) {
        computed[key] = value;
    }
}

void bump(json& computed, const char* key, long long by = 1)
{
    computed[key] = computed.value(key, 0LL) + by;
}

void check_plane_instance(VerificationReport& report, const std::string& label,
                          const BoundaryComplex& c)
{
    const int v = c.num_vertices();
    const Graph g = skeleton_graph(c);
    const int delta = min_degree(g);
    const Cut lambda = global_min_cut(g);
    const std::optional<Cut> mu = min_nontrivial_cut(g);
    const auto nontrivial = static_cast<long long>(mu->size());

    ++report.instances;
    track_max(report.computed, "max_min_degree", delta);
    track_min(report.computed, "min_vertices", v);
    track_max(report.computed, "max_vertices", v);
    if (v >= 5) {
        track_min(report.computed, "min_nontrivial_cut_min", nontrivial);
        if (nontrivial < 6) {
            bump(report.computed, "instances_with_nontrivial_cut_below_6");
        }
    } else {
        bump(report.computed, "tetrahedron_instances");
    }

    if (g.num_edges() != static_cast<std::size_t>(3 * v - 6)) {
        report.failures.push_back(complex_witness(
            label, c, "edge count " + std::to_string(g.num_edges()) + " != 3v - 6"));
    }
    if (delta > 5) {
        report.failures.push_back(
            complex_witness(label, c, "minimum degree " + std::to_string(delta) + " > 5"));
    }
    if (static_cast<int>(lambda.size()) != delta) {
        report.failures.push_back(partition_witness(label, &c, g, lambda.side,
                                                    "edge connectivity " +
                                                        std::to_string(lambda.size()) +
                                                        " != minimum degree"));
    }
    if (mu->size() <= lambda.size()) {
        report.failures.push_back(partition_witness(
            label, &c, g, mu->side, "nontrivial cut of minimum size " + std::to_string(mu->size())));
    }
    if (v >= 6 && v <= kBruteForceMaxVertices) {
        const auto balanced = brute_force_min_cut_with_sides(g, 3);
        bump(report.computed, "instances_with_enumerated_3_3_splits");
        track_min(report.computed, "min_cut_with_sides_at_least_3", static_cast<long long>(balanced->size()));
        if (balanced->size() < 6) {
            report.failures.push_back(partition_witness(label, &c, g, balanced->side,
                                                        "split with both sides >= 3 crosses " +
                                                            std::to_string(balanced->size()) +
                                                            " < 6 edges"));
        }
    }
}

Graph random_connected_graph(Rng& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) {
                    edges.push_back({u, v});
                }
            }
        }
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) {
            return g;
        }
    }
}

// Two cliques of size k joined by `bridges` disjoint edges.
Graph barbell(int k, int bridges)
{
    std::vector<Edge> edges;
    for (int side = 0; side < 2; ++side) {
        for (int u = 0; u < k; ++u) {
            for (int v = u + 1; v < k; ++v) {
                edges.push_back({side * k + u, side * k + v});
            }
        }
    }
    for (int i = 0; i < bridges; ++i) {
        edges.push_back({i, k + i});
    }
    return Graph::from_edges(2 * k, edges);
}

} // namespace

json VerificationReport::to_json() const
{
    return {{"claim", claim},
            {"statement", statement},
            {"parameters", parameters},
            {"instances", instances},
            {"skipped", skipped},
            {"failures", failures},
            {"computed", computed},
            {"passed", passed()}};
}

std::string reports_csv(std::span<const VerificationReport> reports)
{
    std::ostringstream out;
    out << "claim,instances,failures,min_observed,passed\n";
    for (const auto& r : reports) {
        out << r.claim << ',' << r.instances << ',' << r.failures.size() << ',';
        if (r.computed.contains("min_observed")) {
            out << r.computed["min_observed"].dump();
        }
        out << ',' << (r.passed() ? "true" : "false") << '\n';
    }
    return out.str();
}

PlaneInstance plane_instance(const PlaneParams& params, int trial)
{
    const std::uint64_t sub = derive_seed(params.seed, static_cast<std::uint64_t>(trial));
    Rng rng(sub);
    const int v = uniform_int(rng, params.min_v, params.max_v);
    const int flips = uniform_int(rng, 0, params.flip_factor * v);
    PlaneTriangulation t = random_plane_triangulation(v, flips, derive_seed(sub, 1));
    return {std::move(t.complex), flips, t.flips_performed};
}

VerificationReport verify_plane(const PlaneParams& params)
{
    if (params.trials < 0 || params.min_v < 4 || params.max_v < params.min_v) {
        throw std::invalid_argument("verify_plane: need trials >= 0 and 4 <= min_v <= max_v");
    }
    VerificationReport report;
    report.claim = "plane-triangulation-min-cuts-trivial";
    report.statement = "in a plane triangulation every minimum edge cut is trivial; "
                       "splits with both sides >= 3 cross at least 6 edges";
    report.parameters = {{"trials", params.trials},     {"min_v", params.min_v},
                         {"max_v", params.max_v},       {"flip_factor", params.flip_factor},
                         {"seed", params.seed}};

    check_plane_instance(report, "octahedron", cross_polytope(3));
    check_plane_instance(report, "tetrahedron", simplex(3));
    long long flips = 0;
    for (int trial = 0; trial < params.trials; ++trial) {
        const PlaneInstance inst = plane_instance(params, trial);
        flips += inst.flips_performed;
        check_plane_instance(report, "trial " + std::to_string(trial), inst.complex);
    }
    report.computed["flips_performed"] = flips;
    report.computed["min_observed"] = report.computed.value("min_nontrivial_cut_min", json());
    return report;
}

VerificationReport verify_lbt(const LbtParams& params)
{
    if (params.d_min < 2 || params.d_max < params.d_min) {
        throw std::invalid_argument("verify_lbt: invalid dimension range");
    }
    VerificationReport report;
    report.claim = "lower-bound-theorem-edges";
    report.statement = "a simplicial d-polytope with n vertices has at least dn - C(d+1,2) edges, "
                       "with equality for stacked polytopes";
    report.parameters = {{"d_min", params.d_min}, {"d_max", params.d_max},
                         {"n_max", params.n_max}, {"seeds", params.seeds},
                         {"seed", params.seed},   {"include_cyclic", params.include_cyclic}};

    std::size_t stacked = 0, cyclics = 0;
    for (int d = params.d_min; d <= params.d_max; ++d) {
        const long long floor_term = binomial(d + 1, 2);
        for (int n = d + 1; n <= params.n_max; ++n) {
            const long long bound = static_cast<long long>(d) * n - floor_term;
            for (int s = 0; s < params.seeds; ++s) {
                const std::uint64_t sub =
                    derive_seed(params.seed, static_cast<std::uint64_t>((d * 1000 + n) * 100 + s));
                const BoundaryComplex c = random_stacked(d, n, sub);
                ++report.instances;
                ++stacked;
                const ValidationReport valid = validate(c);
                if (!valid.ok()) {
                    report.failures.push_back(complex_witness(
                        "stacked d=" + std::to_string(d) + " n=" + std::to_string(n),
                        c, "invalid complex: " + valid.violations.front().detail));
                    continue;
                }
                const auto f1 = static_cast<long long>(face_counts(c).edges);
                track_min(report.computed, "min_observed", f1 - bound);
                if (f1 != bound) {
                    report.failures.push_back(complex_witness(
                        "stacked d=" + std::to_string(d) + " n=" + std::to_string(n), c,
                        "f1 = " + std::to_string(f1) + " but dn - C(d+1,2) = " + std::to_string(bound)));
                }
            }
            if (params.include_cyclic && d >= 4) {
                const BoundaryComplex c = cyclic(d, n);
                ++report.instances;
                ++cyclics;
                const auto f1 = static_cast<long long>(face_counts(c).edges);
                track_min(report.computed, "min_cyclic_slack", f1 - bound);
                if (f1 != binomial(n, 2) || f1 < bound) {
                    report.failures.push_back(complex_witness(
                        "cyclic d=" + std::to_string(d) + " n=" + std::to_string(n), c,
                        "f1 = " + std::to_string(f1) + ", expected C(n,2) = " +
                            std::to_string(binomial(n, 2)) + " >= " + std::to_string(bound)));
                }
            }
        }
    }
    report.computed["stacked_instances"] = stacked;
    report.computed["cyclic_instances"] = cyclics;
    return report;
}

VerificationReport verify_balanced_partitions(int d)
{
    if (d < 2 || d > 7) {
        throw std::invalid_argument("verify_balanced_partitions: d must be in 2..7");
    }
    VerificationReport report;
    report.claim = "balanced-partition-crossing";
    report.statement = "a d|d split of a simplicial d-polytope with 2d vertices crosses at least "
                       "d(d+1)/2 edges";
    report.parameters = {{"d", d}};
    const int bound = d * (d + 1) / 2;

    const LadderStacked ladder = ladder_stacked(d);
    const std::vector<std::pair<std::string, BoundaryComplex>> complexes = {
        {"ladder_stacked", ladder.complex}, {"cyclic", cyclic(d, 2 * d)}};
    for (const auto& [name, c] : complexes) {
        const Graph g = skeleton_graph(c);
        int best = std::numeric_limits<int>::max();
        std::size_t partitions = 0;
        // Subsets holding vertex 0 enumerate each split once.
        for_each_combination(2 * d - 1, d - 1, [&](const std::vector<int>& rest) {
            std::vector<VertexId> side{0};
            for (int r : rest) {
                side.push_back(r + 1);
            }
            const Cut cut = crossing_edges(g, side);
            ++partitions;
            ++report.instances;
            best = std::min(best, static_cast<int>(cut.size()));
            if (static_cast<int>(cut.size()) < bound) {
                report.failures.push_back(partition_witness(name, &c, g, side,
                                                            "balanced split crosses " +
                                                                std::to_string(cut.size()) +
                                                                " < d(d+1)/2 edges"));
            }
            return true;
        });
        report.computed[name + "_min"] = best;
        report.computed[name + "_partitions"] = partitions;
        track_min(report.computed, "min_observed", best);
    }

    const Graph lg = skeleton_graph(ladder.complex);
    const auto canonical = static_cast<int>(crossing_edges(lg, ladder.first).size());
    report.computed["ladder_canonical_crossing"] = canonical;
    if (canonical != bound) {
        report.failures.push_back(partition_witness("ladder_stacked canonical halves", &ladder.complex,
                                                    lg, ladder.first,
                                                    "crosses " + std::to_string(canonical) +
                                                        " edges, expected d(d+1)/2"));
    }
    return report;
}

VerificationReport verify_vertex_figure(const VertexFigureParams& params)
{
    if (params.d < 2 || params.n < params.d + 1) {
        throw std::invalid_argument("verify_vertex_figure: need d >= 2 and n >= d+1");
    }
    VerificationReport report;
    report.claim = "vertex-figure-new-edge";
    report.statement = "if {u,v} is an edge of conv(V \\ {w}) but not of conv(V), "
                       "then {u,w} and {v,w} are edges of conv(V)";
    report.parameters = {{"trials", params.trials}, {"d", params.d}, {"n", params.n},
                         {"box", params.box},       {"seed", params.seed}};

    std::size_t deletions = 0, new_edges = 0;
    for (int trial = 0; trial < params.trials; ++trial) {
        const PointConfiguration cfg = random_general_position(
            params.d, params.n, derive_seed(params.seed, static_cast<std::uint64_t>(trial)), params.box);
        const HullResult hull = facets_brute_force(cfg);
        if (static_cast<int>(hull.hull_vertices.size()) < params.d + 2) {
            ++report.skipped;
            continue;
        }
        ++report.instances;
        for (int w : hull.hull_vertices) {
            const VertexFigureCheck check = vertex_figure_check(cfg, w);
            ++deletions;
            new_edges += check.new_edges.size();
            for (const auto& bad : check.violations) {
                report.failures.push_back({{"instance", "trial " + std::to_string(trial)},
                                           {"points", write_points_text(cfg)},
                                           {"triple", {bad.u, bad.v, bad.w}},
                                           {"reason", "new edge {u,v} without both {u,w}, {v,w}"}});
            }
        }
    }
    report.computed["vertex_deletions"] = deletions;
    report.computed["new_edges_checked"] = new_edges;
    report.computed["min_observed"] = report.failures.size();
    return report;
}

VerificationReport verify_cyclic_oracle(int d_max, int n_max)
{
    VerificationReport report;
    report.claim = "cyclic-gale-vs-hull";
    report.statement = "Gale evenness facets equal the exact convex hull of moment-curve points";
    report.parameters = {{"d_max", d_max}, {"n_max", n_max}};
    for (int d = 2; d <= d_max; ++d) {
        for (int n = d + 1; n <= n_max; ++n) {
            const BoundaryComplex gale = cyclic(d, n);
            const HullResult hull = facets_brute_force(moment_curve_points(d, n));
            ++report.instances;
            if (!(hull.complex == gale) || static_cast<int>(hull.hull_vertices.size()) != n) {
                report.failures.push_back(
                    {{"instance", "cyclic d=" + std::to_string(d) + " n=" + std::to_string(n)},
                     {"gale", complex_to_json(gale)},
                     {"hull", complex_to_json(hull.complex)},
                     {"reason", "facet sets differ"}});
            }
        }
    }
    return report;
}

std::vector<NamedGraph> brute_force_corpus(std::uint64_t seed)
{
    std::vector<NamedGraph> corpus;
    auto add_complex = [&](const std::string& name, const BoundaryComplex& c) {
        corpus.push_back({name, skeleton_graph(c)});
    };
    for (int d = 2; d <= 8; ++d) {
        add_complex("simplex(" + std::to_string(d) + ")", simplex(d));
    }
    for (int d = 3; d <= 7; ++d) {
        add_complex("cross_polytope(" + std::to_string(d) + ")", cross_polytope(d));
    }
    for (int d = 2; d <= 6; ++d) {
        for (int n = d + 2; n <= 12; ++n) {
            add_complex("cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")", cyclic(d, n));
        }
    }
    for (int d = 2; d <= 7; ++d) {
        add_complex("ladder_stacked(" + std::to_string(d) + ")", ladder_stacked(d).complex);
    }
    for (int d = 3; d <= 6; ++d) {
        for (int k = 0; k < 3; ++k) {
            const int n = std::min(14, d + 3 + 3 * k);
            add_complex("random_stacked(" + std::to_string(d) + "," + std::to_string(n) + ")",
                        random_stacked(d, n, derive_seed(seed, 100 + 10 * d + k)));
        }
    }
    for (int v = 5; v <= 14; ++v) {
        for (int k = 0; k < 2; ++k) {
            add_complex("plane(" + std::to_string(v) + ")",
                        random_plane_triangulation(v, 3 * v, derive_seed(seed, 200 + 10 * v + k)).complex);
        }
    }
    {
        const BoundaryComplex c46 = cyclic(4, 6);
        add_complex("cyclic(4,6)#cyclic(4,6)",
                    connected_sum(c46, c46, GluingMap::order_preserving(c46.facets().front(), c46.facets().back())));
        const BoundaryComplex oct = cross_polytope(3);
        add_complex("octahedron#octahedron",
                    connected_sum(oct, oct, GluingMap::order_preserving(oct.facets().front(), oct.facets().front())));
        const BoundaryComplex s3 = simplex(3);
        add_complex("octahedron#simplex(3)",
                    connected_sum(oct, s3, GluingMap::order_preserving(oct.facets().back(), s3.facets().front())));
        const BoundaryComplex c37 = cyclic(3, 7);
        add_complex("cyclic(3,7)#octahedron",
                    connected_sum(c37, oct, GluingMap::order_preserving(c37.facets().front(), oct.facets().front())));
    }
    for (int n = 4; n <= 14; ++n) {
        corpus.push_back({"cycle(" + std::to_string(n) + ")", cycle_graph(n)});
    }
    for (int n = 4; n <= 8; ++n) {
        corpus.push_back({"path(" + std::to_string(n) + ")", path_graph(n)});
    }
    for (int k = 3; k <= 7; ++k) {
        for (int bridges = 1; bridges <= 3 && bridges <= k; ++bridges) {
            corpus.push_back({"barbell(" + std::to_string(k) + "," + std::to_string(bridges) + ")",
                              barbell(k, bridges)});
        }
    }
    Rng rng(derive_seed(seed, 300));
    for (int i = 0; i < 40; ++i) {
        const int n = uniform_int(rng, 4, 14);
        const double p = 0.2 + 0.05 * uniform_int(rng, 0, 10);
        corpus.push_back({"random(" + std::to_string(n) + ")#" + std::to_string(i),
                          random_connected_graph(rng, n, p)});
    }
    return corpus;
}

VerificationReport verify_cut_oracle(std::span<const NamedGraph> corpus)
{
    VerificationReport report;
    report.claim = "cut-algorithms-vs-enumeration";
    report.statement = "Stoer-Wagner and the flow-based nontrivial cut agree with exhaustive enumeration";
    report.parameters = {{"graphs", corpus.size()}};
    std::size_t nontrivial_compared = 0;
    for (const NamedGraph& ng : corpus) {
        const Graph& g = ng.graph;
        ++report.instances;
        const BruteForceCuts oracle = brute_force_cuts(g);
        const Cut global = global_min_cut(g);
        auto fail = [&](const std::vector<VertexId>& side, const std::string& why) {
            report.failures.push_back(partition_witness(ng.name, nullptr, g, side, why));
        };
        if (global.size() != oracle.min_cut.size()) {
            fail(global.side, "global min cut " + std::to_string(global.size()) + " != enumerated " +
                                  std::to_string(oracle.min_cut.size()));
        }
        if (crossing_edges(g, global.side) != global) {
            fail(global.side, "global cut witness is inconsistent");
        }
        const std::optional<Cut> flow = g.num_vertices() >= 4 ? min_nontrivial_cut(g) : std::nullopt;
        if (flow.has_value() != oracle.min_nontrivial.has_value()) {
            fail({}, "nontrivial cut existence differs");
            continue;
        }
        if (flow) {
            ++nontrivial_compared;
            if (flow->size() != oracle.min_nontrivial->size() || flow->trivial) {
                fail(flow->side, "nontrivial min cut " + std::to_string(flow->size()) +
                                     " != enumerated " + std::to_string(oracle.min_nontrivial->size()));
            }
            if (crossing_edges(g, flow->side) != *flow) {
                fail(flow->side, "nontrivial cut witness is inconsistent");
            }
        }
    }
    report.computed["nontrivial_compared"] = nontrivial_compared;
    return report;
}

VerificationReport verify_side_bound(std::span<const NamedGraph> corpus)
{
    VerificationReport report;
    report.claim = "nontrivial-min-cut-side-bound";
    report.statement = "both sides of a nontrivial minimum edge cut have at least δ vertices";
    report.parameters = {{"graphs", corpus.size()}};
    std::size_t graphs_with = 0, cuts_checked = 0;
    for (const NamedGraph& ng : corpus) {
        const Graph& g = ng.graph;
        const int n = g.num_vertices();
        ++report.instances;
        const int delta = min_degree(g);
        const int lambda = static_cast<int>(brute_force_cuts(g).min_cut.size());
        bool any = false;
        for_each_bipartition(g, [&](std::uint32_t side, int crossing) {
            const int k = std::popcount(side);
            const int smaller = std::min(k, n - k);
            if (crossing != lambda || smaller < 2) {
                return;
            }
            any = true;
            ++cuts_checked;
            track_min(report.computed, "min_observed", smaller - delta);
            if (smaller < delta) {
                report.failures.push_back(partition_witness(
                    ng.name, nullptr, g, mask_to_vertices(side, n),
                    "nontrivial minimum cut has a side of " + std::to_string(smaller) + " < δ = " +
                        std::to_string(delta) + " vertices"));
            }
        });
        graphs_with += any ? 1 : 0;
    }
    report.computed["graphs_with_nontrivial_min_cut"] = graphs_with;
    report.computed["cuts_checked"] = cuts_checked;
    return report;
}

VerificationReport verify_main_bound(const BoundaryComplex& c, const std::string& label)
{
    const ValidationReport valid = validate(c);
    if (!valid.ok()) {
        throw std::invalid_argument("verify_main_bound: invalid complex: " +
                                    valid.violations.front().detail);
    }
    VerificationReport report;
    report.claim = "simplicial-nontrivial-min-cut-bound";
    report.statement = "a nontrivial minimum edge cut of a simplicial d-polytope has at least "
                       "d(d+1)/2 edges; edge connectivity >= min(δ, d(d+1)/2)";
    report.parameters = {{"instance", label}, {"d", c.dim()}, {"n", c.num_vertices()}};

    const int d = c.dim();
    const int bound = d * (d + 1) / 2;
    const Graph g = skeleton_graph(c);
    const int delta = min_degree(g);
    const Cut lambda = global_min_cut(g);
    const std::optional<Cut> mu = min_nontrivial_cut(g);
    const int lam = static_cast<int>(lambda.size());
    report.instances = 1;
    report.computed["min_degree"] = delta;
    report.computed["edge_connectivity"] = lam;
    report.computed["bound"] = bound;
    report.computed["connectivity_floor"] = std::min(delta, bound);

    if (lam < std::min(delta, bound)) {
        report.failures.push_back(partition_witness(label, &c, g, lambda.side,
                                                    "edge connectivity below min(δ, d(d+1)/2)"));
    }
    if (mu) {
        const int m = static_cast<int>(mu->size());
        report.computed["min_nontrivial_cut"] = m;
        report.computed["min_observed"] = m;
        report.computed["nontrivial_cut_at_least_bound"] = m >= bound;
        if (lam != std::min(delta, m)) {
            report.failures.push_back(partition_witness(label, &c, g, lambda.side,
                                                        "edge connectivity != min(δ, min nontrivial cut)"));
        }
        if (m == lam && m < bound) {
            report.failures.push_back(partition_witness(label, &c, g, mu->side,
                                                        "nontrivial minimum cut with " +
                                                            std::to_string(m) + " < d(d+1)/2 edges"));
        }
    }
    if (g.num_vertices() <= kBruteForceMaxVertices) {
        if (const auto wide = brute_force_min_cut_with_sides(g, d)) {
            report.computed["min_cut_with_sides_at_least_d"] = wide->size();
            if (static_cast<int>(wide->size()) < bound) {
                report.failures.push_back(partition_witness(label, &c, g, wide->side,
                                                            "split with both sides >= d crosses " +
                                                                std::to_string(wide->size()) +
                                                                " < d(d+1)/2 edges"));
            }
        }
    }
    return report;
}

VerificationReport verify_waist(int d)
{
    const WaistCertificate cert = waist_polytope(d);
    VerificationReport report;
    report.claim = "tight-nontrivial-min-cut";
    report.statement = "C # S # C has minimum degree d(d+1)/2 and a nontrivial minimum edge cut "
                       "with d(d+1)/2 edges";
    report.parameters = {{"d", d}};
    report.instances = 1;

    const std::string label = "waist_polytope(" + std::to_string(d) + ")";
    const int bound = cert.expected_cut_size;
    const ValidationReport valid = validate(cert.complex);
    if (!valid.ok()) {
        report.failures.push_back(complex_witness(label, cert.complex,
                                                  "invalid complex: " + valid.violations.front().detail));
        return report;
    }
    const Graph g = skeleton_graph(cert.complex);
    const int delta = min_degree(g);
    const Cut certificate = crossing_edges(g, cert.left);
    const Cut lambda = global_min_cut(g);
    const std::optional<Cut> mu = min_nontrivial_cut(g);

    report.computed["vertices"] = g.num_vertices();
    report.computed["edges"] = g.num_edges();
    report.computed["expected"] = bound;
    report.computed["min_degree"] = delta;
    report.computed["certificate_cut"] = certificate.size();
    report.computed["certificate_trivial"] = certificate.trivial;
    report.computed["min_nontrivial_cut"] = mu->size();
    report.computed["edge_connectivity"] = lambda.size();
    report.computed["min_observed"] = mu->size();
    report.computed["witness_matches_certificate"] = mu->side == certificate.side;

    auto fail = [&](const std::vector<VertexId>& side, const std::string& why) {
        report.failures.push_back(partition_witness(label, &cert.complex, g, side, why));
    };
    if (delta != bound) {
        fail({}, "minimum degree " + std::to_string(delta) + " != d(d+1)/2");
    }
    if (static_cast<int>(certificate.size()) != bound || certificate.trivial) {
        fail(cert.left, "certificate cut has " + std::to_string(certificate.size()) + " edges");
    }
    if (static_cast<int>(mu->size()) != bound) {
        fail(mu->side, "minimum nontrivial cut " + std::to_string(mu->size()) + " != d(d+1)/2");
    }
    if (static_cast<int>(lambda.size()) != bound) {
        fail(lambda.side, "edge connectivity " + std::to_string(lambda.size()) + " != d(d+1)/2");
    }
    return report;
}

std::vector<VerificationReport> verify_all(std::uint64_t seed)
{
    std::vector<VerificationReport> out;
    for (int d = 4; d <= 8; ++d) {
        out.push_back(verify_waist(d));
    }
    PlaneParams plane;
    plane.seed = seed;
    out.push_back(verify_plane(plane));
    LbtParams lbt;
    lbt.seed = seed;
    out.push_back(verify_lbt(lbt));
    out.push_back(verify_balanced_partitions(3));
    out.push_back(verify_balanced_partitions(4));
    out.push_back(verify_cyclic_oracle(5, 9));
    for (const auto& [d, n] : {std::pair{3, 8}, std::pair{4, 9}}) {
        VertexFigureParams vf;
        vf.d = d;
        vf.n = n;
        vf.seed = seed;
        out.push_back(verify_vertex_figure(vf));
    }
    const auto corpus = brute_force_corpus(seed);
    out.push_back(verify_cut_oracle(corpus));
    out.push_back(verify_side_bound(corpus));
    out.push_back(verify_main_bound(cross_polytope(3), "octahedron"));
    out.push_back(verify_main_bound(cyclic(4, 11), "cyclic(4,11)"));
    out.push_back(verify_main_bound(waist_polytope(5).complex, "waist_polytope(5)"));
    return out;
}

} // namespace polycut
