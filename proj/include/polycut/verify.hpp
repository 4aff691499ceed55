#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycut/complex.hpp"
#include "polycut/cuts.hpp"
#include "polycut/hull.hpp"

namespace polycut {

inline constexpr std::uint64_t kDefaultSeed = 1;

/**
 * Outcome of one executable claim. `failures` holds self-contained witnesses
 * (a complex or point file plus the offending partition or triple), so any
 * failure can be re-checked in isolation.
 */
struct VerificationReport
{
    std::string claim;
    std::string statement;
    nlohmann::json parameters = nlohmann::json::object();
    std::size_t instances = 0;
    std::size_t skipped = 0;
    std::vector<nlohmann::json> failures;
    nlohmann::json computed = nlohmann::json::object();

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Header plus one line per report: claim,instances,failures,min_observed,passed.
std::string reports_csv(std::span<const VerificationReport> reports);

// --- plane triangulations ---------------------------------------------------

struct PlaneParams
{
    int trials = 200;
    int min_v = 5;
    int max_v = 40;
    int flip_factor = 3; ///< flips drawn uniformly from [0, flip_factor * v]
    std::uint64_t seed = kDefaultSeed;
};

struct PlaneInstance
{
    BoundaryComplex complex;
    int flips_requested = 0;
    int flips_performed = 0;
};

/// The triangulation used for trial `trial`; a pure function of (params, trial).
PlaneInstance plane_instance(const PlaneParams& params, int trial);

/**
 * Every minimum edge cut of a plane triangulation is trivial. Per instance:
 * e = 3v - 6, δ <= 5, edge connectivity = δ and the minimum nontrivial cut is
 * strictly larger than it. For 6 <= v <= 16 the cut between any two parts of
 * size >= 3 is also checked to be at least 6 by enumeration. The octahedron and
 * the tetrahedron are always included as fixed instances.
 */
VerificationReport verify_plane(const PlaneParams& params);

// --- Lower Bound Theorem ----------------------------------------------------

struct LbtParams
{
    int d_min = 3;
    int d_max = 8;
    int n_max = 30;
    int seeds = 5;
    std::uint64_t seed = kDefaultSeed;
    bool include_cyclic = true;
};

/// Stacked polytopes meet f1 >= dn - C(d+1,2) with equality; cyclic ones (d >= 4) have f1 = C(n,2).
VerificationReport verify_lbt(const LbtParams& params);

/// Every d|d split of ladder_stacked(d) and cyclic(d, 2d) has >= d(d+1)/2 crossing edges.
VerificationReport verify_balanced_partitions(int d);

// --- geometry ---------------------------------------------------------------

struct VertexFigureParams
{
    int trials = 100;
    int d = 3;
    int n = 8;
    long box = 50;
    std::uint64_t seed = kDefaultSeed;
};

/// New-edge lemma on random general-position configurations, every hull vertex deleted in turn.
VerificationReport verify_vertex_figure(const VertexFigureParams& params);

/// cyclic(d, n) equals the exact hull of moment-curve points for 2 <= d <= d_max, n <= n_max.
VerificationReport verify_cyclic_oracle(int d_max = 5, int n_max = 9);

// --- cut algorithms ---------------------------------------------------------

struct NamedGraph
{
    std::string name;
    Graph graph;
};

/// Connected graphs with 3 <= n <= 14: polytope skeletons plus random and handmade graphs.
std::vector<NamedGraph> brute_force_corpus(std::uint64_t seed = kDefaultSeed);

/// Flow-based global and nontrivial minima agree with exhaustive enumeration.
VerificationReport verify_cut_oracle(std::span<const NamedGraph> corpus);

/// Both sides of every nontrivial globally minimum cut have at least δ vertices.
VerificationReport verify_side_bound(std::span<const NamedGraph> corpus);

// --- main bound and the tight construction ------------------------------------

/**
 * For a simplicial d-polytope boundary: a nontrivial cut that is also minimum
 * has >= d(d+1)/2 edges, edge connectivity = min(δ, min nontrivial cut) and
 * >= min(δ, d(d+1)/2). For n <= 16 every split with both sides >= d is also
 * checked to cross >= d(d+1)/2 edges. Throws std::invalid_argument on an invalid complex.
 */
VerificationReport verify_main_bound(const BoundaryComplex& c, const std::string& label = "input");

/// waist_polytope(d): δ, certificate cut, minimum nontrivial cut and edge connectivity all equal d(d+1)/2.
VerificationReport verify_waist(int d);

/// The complete suite with default parameters.
std::vector<VerificationReport> verify_all(std::uint64_t seed = kDefaultSeed);

} // namespace polycut
