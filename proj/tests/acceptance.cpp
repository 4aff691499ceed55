// Acceptance suite. Prints one PASS/FAIL line per criterion.
// Usage: polycut_acceptance [criterion...]   (no arguments runs all eight)

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polycut/complex.hpp"
#include "polycut/cuts.hpp"
#include "polycut/generators.hpp"
#include "polycut/hull.hpp"
#include "polycut/random.hpp"
#include "polycut/verify.hpp"
#include "support/oracles.hpp"

using namespace polycut;

namespace {

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why)
    {
        if (pass) {
            detail << "first failure: " << why << "; ";
        }
        pass = false;
    }
};

int tri(int d) { return d * (d + 1) / 2; }

// 1. waist_polytope(d) for d = 4..8: δ, certificate crossing and min nontrivial cut all equal d(d+1)/2.
void tight_construction(Outcome& o)
{
    for (int d = 4; d <= 8; ++d) {
        WaistCertificate w = waist_polytope(d);
        Graph g = skeleton_graph(w.complex);
        int delta = min_degree(g);
        int cert = testing::crossing_count(g, w.left);
        std::optional<Cut> mu = min_nontrivial_cut(g);
        int mus = mu ? static_cast<int>(mu->size()) : -1;
        o.detail << "d=" << d << " n=" << g.num_vertices() << " delta=" << delta << " cert=" << cert
                 << " mu=" << mus << "; ";
        if (delta != tri(d) || cert != tri(d) || mus != tri(d)) {
            o.fail("d=" + std::to_string(d));
        }
    }
}

// 2. 200 seeded plane triangulations, 5 <= v <= 40, up to 3v flips: λ = δ <= 5 and μ >= 6 everywhere.
void plane(Outcome& o)
{
    PlaneParams params;
    int below = 0;
    int min_mu = 1 << 30;
    for (int t = 0; t < params.trials; ++t) {
        PlaneInstance inst = plane_instance(params, t);
        Graph g = skeleton_graph(inst.complex);
        int v = g.num_vertices();
        int delta = min_degree(g);
        int lambda = static_cast<int>(global_min_cut(g).size());
        int mu = static_cast<int>(min_nontrivial_cut(g)->size());
        min_mu = std::min(min_mu, mu);
        if (lambda != delta || delta > 5) {
            o.fail("trial " + std::to_string(t) + " v=" + std::to_string(v) + " lambda/delta");
        }
        if (mu < 6) {
            ++below;
            o.fail("trial " + std::to_string(t) + " v=" + std::to_string(v) + " delta=" +
                   std::to_string(delta) + " mu=" + std::to_string(mu));
        }
    }
    o.detail << params.trials << " trials, " << below << " with min nontrivial cut < 6, smallest " << min_mu
             << "; ";
}

// 3. Stacked polytopes 3 <= d <= 8, d+1 <= n <= 30, 5 seeds: f1 = dn - C(d+1,2).
void lbt(Outcome& o)
{
    int count = 0;
    for (int d = 3; d <= 8; ++d) {
        for (int n = d + 1; n <= 30; ++n) {
            for (int s = 0; s < 5; ++s) {
                std::uint64_t seed = derive_seed(derive_seed(kDefaultSeed, 1000 * d + n), s);
                BoundaryComplex c = random_stacked(d, n, seed);
                long long f1 = static_cast<long long>(skeleton_graph(c).num_edges());
                long long bound = static_cast<long long>(d) * n - binomial(d + 1, 2);
                ++count;
                if (f1 != bound) {
                    o.fail("d=" + std::to_string(d) + " n=" + std::to_string(n) + " f1=" + std::to_string(f1));
                }
            }
        }
    }
    o.detail << count << " stacked polytopes; ";
}

int min_balanced_crossing(const Graph& g)
{
    const int n = g.num_vertices();
    int best = 1 << 30;
    for_each_bipartition(g, [&](std::uint32_t mask, int crossing) {
        if (2 * __builtin_popcount(mask) == n) {
            best = std::min(best, crossing);
        }
    });
    return best;
}

// 4. Balanced splits of ladder_stacked(d) and cyclic(d, 2d), d = 3, 4.
void balanced(Outcome& o)
{
    for (int d = 3; d <= 4; ++d) {
        LadderStacked ladder = ladder_stacked(d);
        Graph lg = skeleton_graph(ladder.complex);
        Graph cg = skeleton_graph(cyclic(d, 2 * d));
        int lmin = min_balanced_crossing(lg);
        int cmin = min_balanced_crossing(cg);
        int canonical = testing::crossing_count(lg, ladder.first);
        o.detail << "d=" << d << " ladder min=" << lmin << " canonical=" << canonical << " cyclic min=" << cmin
                 << "; ";
        if (lmin < tri(d) || cmin < tri(d) || canonical != tri(d) || lmin != tri(d)) {
            o.fail("d=" + std::to_string(d));
        }
    }
}

// 5. cyclic(d, n) equals the exact hull of moment-curve points, 2 <= d <= 5, d+1 <= n <= 9.
void cyclic_oracle(Outcome& o)
{
    int count = 0;
    for (int d = 2; d <= 5; ++d) {
        for (int n = d + 1; n <= 9; ++n) {
            HullResult h = facets_brute_force(moment_curve_points(d, n));
            ++count;
            if (!(h.complex == cyclic(d, n)) || !h.interior_points.empty()) {
                o.fail("d=" + std::to_string(d) + " n=" + std::to_string(n));
            }
        }
    }
    o.detail << count << " (d, n) pairs; ";
}

// 6. Vertex-figure lemma, 100 configurations each for (3, 8) and (4, 9).
void vertex_figure(Outcome& o)
{
    for (auto [d, n] : {std::pair{3, 8}, std::pair{4, 9}}) {
        VertexFigureParams p;
        p.d = d;
        p.n = n;
        VerificationReport r = verify_vertex_figure(p);
        o.detail << "(" << d << "," << n << ") configs=" << r.instances << " violations=" << r.failures.size()
                 << " new_edges=" << r.computed.value("new_edges_checked", 0) << "; ";
        if (r.instances != 100 || !r.passed()) {
            o.fail("(" + std::to_string(d) + "," + std::to_string(n) + ")");
        }
    }
}

// 7. Flow-based global and nontrivial minima equal exhaustive enumeration on >= 100 graphs with n <= 14.
void cut_oracle(Outcome& o)
{
    std::vector<NamedGraph> corpus = brute_force_corpus();
    for (const NamedGraph& ng : corpus) {
        const Graph& g = ng.graph;
        if (g.num_vertices() > 14 || !is_connected(g)) {
            o.fail(ng.name + " outside corpus bounds");
            continue;
        }
        BruteForceCuts bf = brute_force_cuts(g);
        Cut sw = global_min_cut(g);
        std::optional<Cut> mu = min_nontrivial_cut(g);
        if (sw.size() != bf.min_cut.size() || sw.size() != static_cast<std::size_t>(testing::crossing_count(g, sw.side))) {
            o.fail(ng.name + " global");
        }
        if (mu.has_value() != bf.min_nontrivial.has_value() ||
            (mu && (mu->size() != bf.min_nontrivial->size() ||
                    mu->size() != static_cast<std::size_t>(testing::crossing_count(g, mu->side))))) {
            o.fail(ng.name + " nontrivial");
        }
    }
    o.detail << corpus.size() << " graphs; ";
    if (corpus.size() < 100) {
        o.fail("corpus too small");
    }
}

// 8. Every nontrivial globally minimum cut has both sides >= δ.
void side_bound(Outcome& o)
{
    std::vector<NamedGraph> corpus = brute_force_corpus();
    long long checked = 0;
    for (const NamedGraph& ng : corpus) {
        const Graph& g = ng.graph;
        const int n = g.num_vertices();
        const int delta = min_degree(g);
        const int lambda = static_cast<int>(brute_force_cuts(g).min_cut.size());
        for_each_bipartition(g, [&](std::uint32_t mask, int crossing) {
            int a = __builtin_popcount(mask);
            int b = n - a;
            if (crossing != lambda || a < 2 || b < 2) {
                return;
            }
            ++checked;
            if (a < delta || b < delta) {
                o.fail(ng.name + " side of size " + std::to_string(std::min(a, b)));
            }
        });
    }
    o.detail << corpus.size() << " graphs, " << checked << " nontrivial minimum cuts; ";
}

struct Criterion
{
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria = {
        {1, "tight construction", tight_construction},
        {2, "plane triangulations", plane},
        {3, "LBT equality", lbt},
        {4, "balanced partitions", balanced},
        {5, "cyclic oracle", cyclic_oracle},
        {6, "vertex-figure lemma", vertex_figure},
        {7, "cut-algorithm equivalence", cut_oracle},
        {8, "side bound", side_bound},
    };
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << secs
                  << " s): " << o.detail.str() << std::endl;
    }
    return all_pass ? 0 : 1;
}
