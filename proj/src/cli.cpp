#include "polycut/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polycut/generators.hpp"
#include "polycut/io.hpp"
#include "polycut/verify.hpp"

namespace polycut::cli {

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    std::string kind;
    std::string input;
    std::string out_path;
    std::string format;
    std::string input_kind = "auto";
    std::optional<int> dim;
    std::optional<int> verts;
    std::optional<int> flips;
    std::optional<int> trials;
    std::uint64_t seed = kDefaultSeed;
    long box = 50;
    bool nontrivial = false;
    bool brute_force = false;
};

std::string read_input(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

void emit(const Options& opt, std::ostream& out, const std::string& payload)
{
    if (opt.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write '" + opt.out_path + "'");
    }
    file << payload;
}

int require(const std::optional<int>& value, const char* flag)
{
    if (!value) {
        throw UsageError(std::string("missing required flag ") + flag);
    }
    return *value;
}

std::string complex_payload(const BoundaryComplex& c, const std::string& format)
{
    if (format == "text") {
        return write_complex_text(c);
    }
    if (format.empty() || format == "json") {
        return write_complex_json(c);
    }
    throw UsageError("complex output supports --format json|text");
}

int cmd_gen(const Options& opt, std::ostream& out)
{
    BoundaryComplex c;
    if (opt.kind == "simplex") {
        c = simplex(require(opt.dim, "--dim"));
    } else if (opt.kind == "cross") {
        c = cross_polytope(require(opt.dim, "--dim"));
    } else if (opt.kind == "cyclic") {
        c = cyclic(require(opt.dim, "--dim"), require(opt.verts, "--verts"));
    } else if (opt.kind == "ladder") {
        c = ladder_stacked(require(opt.dim, "--dim")).complex;
    } else if (opt.kind == "waist") {
        c = waist_polytope(require(opt.dim, "--dim")).complex;
    } else if (opt.kind == "stacked") {
        c = random_stacked(require(opt.dim, "--dim"), require(opt.verts, "--verts"), opt.seed);
    } else {
        const int flips = opt.flips.value_or(0);
        if (flips < 0) {
            throw UsageError("--flips must be non-negative");
        }
        c = random_plane_triangulation(require(opt.verts, "--verts"), flips, opt.seed).complex;
    }
    emit(opt, out, complex_payload(c, opt.format));
    return kExitOk;
}

BoundaryComplex load_complex(const Options& opt, std::istream& in)
{
    return parse_complex(read_input(opt.input, in));
}

Graph load_graph_or_complex(const Options& opt, std::istream& in)
{
    const std::string text = read_input(opt.input, in);
    if (opt.input_kind == "graph") {
        return parse_graph(text);
    }
    if (opt.input_kind == "complex") {
        return skeleton_graph(parse_complex(text));
    }
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        return skeleton_graph(parse_complex(text));
    }
    try {
        return parse_graph(text);
    } catch (const ParseError& as_graph) {
        try {
            return skeleton_graph(parse_complex(text));
        } catch (const ParseError& as_complex) {
            throw as_complex.line() > as_graph.line() ? as_complex : as_graph;
        }
    }
}

int cmd_graph(const Options& opt, std::istream& in, std::ostream& out)
{
    emit(opt, out, write_graph_text(skeleton_graph(load_complex(opt, in))));
    return kExitOk;
}

int cmd_mincut(const Options& opt, std::istream& in, std::ostream& out)
{
    const Graph g = load_graph_or_complex(opt, in);
    std::optional<Cut> cut;
    if (opt.brute_force) {
        BruteForceCuts bf = brute_force_cuts(g);
        cut = opt.nontrivial ? bf.min_nontrivial : std::optional<Cut>(bf.min_cut);
    } else if (opt.nontrivial) {
        cut = min_nontrivial_cut(g);
    } else {
        cut = global_min_cut(g);
    }
    if (!cut) {
        throw UsageError("no nontrivial cut exists (need at least 4 vertices)");
    }
    emit(opt, out, dump_line(cut_to_json(*cut)));
    return kExitOk;
}

int cmd_hull(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
{
    const HullResult hull = facets_brute_force(parse_points(read_input(opt.input, in)));
    if (!hull.interior_points.empty()) {
        err << "note: " << hull.interior_points.size() << " input point(s) are not hull vertices:";
        for (int i : hull.interior_points) {
            err << ' ' << i;
        }
        err << '\n';
    }
    emit(opt, out, complex_payload(hull.complex, opt.format));
    return kExitOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out)
{
    std::vector<VerificationReport> reports;
    const std::string& which = opt.kind;
    if (which == "plane") {
        PlaneParams p;
        p.seed = opt.seed;
        p.trials = opt.trials.value_or(p.trials);
        p.max_v = opt.verts.value_or(p.max_v);
        p.flip_factor = opt.flips.value_or(p.flip_factor);
        reports.push_back(verify_plane(p));
    } else if (which == "lbt") {
        LbtParams p;
        p.seed = opt.seed;
        if (opt.dim) {
            p.d_min = p.d_max = *opt.dim;
        }
        p.n_max = opt.verts.value_or(p.n_max);
        if (p.d_min < 3 || p.d_max > 8 || p.n_max > 30) {
            throw UsageError("lbt: need 3 <= d <= 8 and n <= 30");
        }
        reports.push_back(verify_lbt(p));
    } else if (which == "balanced") {
        if (opt.dim) {
            reports.push_back(verify_balanced_partitions(*opt.dim));
        } else {
            reports.push_back(verify_balanced_partitions(3));
            reports.push_back(verify_balanced_partitions(4));
        }
    } else if (which == "vertex-figure") {
        VertexFigureParams p;
        p.seed = opt.seed;
        p.box = opt.box;
        p.d = opt.dim.value_or(3);
        p.n = opt.verts.value_or(p.d + 5);
        p.trials = opt.trials.value_or(p.trials);
        if (p.n > 10 || p.d < 2 || p.d > 4) {
            throw UsageError("vertex-figure: need 2 <= d <= 4 and n <= 10");
        }
        reports.push_back(verify_vertex_figure(p));
    } else if (which == "side-bound") {
        reports.push_back(verify_side_bound(brute_force_corpus(opt.seed)));
    } else if (which == "cut-oracle") {
        reports.push_back(verify_cut_oracle(brute_force_corpus(opt.seed)));
    } else if (which == "cyclic-oracle") {
        reports.push_back(verify_cyclic_oracle(opt.dim.value_or(5), opt.verts.value_or(9)));
    } else if (which == "main") {
        if (opt.input.empty()) {
            throw UsageError("verify main needs a complex file");
        }
        reports.push_back(verify_main_bound(load_complex(opt, in), opt.input));
    } else if (which == "waist") {
        reports.push_back(verify_waist(opt.dim.value_or(4)));
    } else {
        reports = verify_all(opt.seed);
    }

    std::string payload;
    if (opt.format == "csv") {
        payload = reports_csv(reports);
    } else if (opt.format.empty() || opt.format == "json") {
        if (reports.size() == 1) {
            payload = dump_line(reports.front().to_json());
        } else {
            nlohmann::json all = nlohmann::json::array();
            for (const auto& r : reports) {
                all.push_back(r.to_json());
            }
            payload = dump_line(all);
        }
    } else {
        throw UsageError("verify output supports --format json|csv");
    }
    emit(opt, out, payload);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Simplicial polytope boundary complexes and their edge cuts", "polycut"};
    app.require_subcommand(1);
    Options opt;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Output file (default stdout)"); };

    auto* gen = app.add_subcommand("gen", "Generate a boundary complex");
    gen->add_option("kind", opt.kind, "Family")
        ->required()
        ->check(CLI::IsMember({"simplex", "cross", "cyclic", "ladder", "waist", "plane", "stacked"}));
    gen->add_option("--dim", opt.dim, "Dimension d");
    gen->add_option("--verts", opt.verts, "Number of vertices");
    gen->add_option("--flips", opt.flips, "Random diagonal flips (plane)");
    gen->add_option("--seed", opt.seed, "Random seed");
    gen->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    add_out(gen);

    auto* graph = app.add_subcommand("graph", "Complex file to edge list");
    graph->add_option("input", opt.input, "Complex file or - for stdin")->required();
    graph->add_option("--format", opt.format, "text")->check(CLI::IsMember({"text"}));
    add_out(graph);

    auto* mincut = app.add_subcommand("mincut", "Minimum edge cut of a graph or complex");
    mincut->add_option("input", opt.input, "Graph or complex file, or - for stdin")->required();
    mincut->add_flag("--nontrivial", opt.nontrivial, "Minimum cut with both sides >= 2");
    mincut->add_flag("--brute-force", opt.brute_force, "Exhaustive enumeration (n <= 16)");
    mincut->add_option("--input-kind", opt.input_kind, "auto|graph|complex")
        ->check(CLI::IsMember({"auto", "graph", "complex"}));
    mincut->add_option("--format", opt.format, "json")->check(CLI::IsMember({"json"}));
    add_out(mincut);

    auto* hull = app.add_subcommand("hull", "Exact convex hull facets of a point file");
    hull->add_option("input", opt.input, "Point file or - for stdin")->required();
    hull->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    add_out(hull);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", opt.kind, "Suite")
        ->required()
        ->check(CLI::IsMember({"plane", "lbt", "balanced", "vertex-figure", "side-bound", "main",
                               "waist", "cut-oracle", "cyclic-oracle", "all"}));
    verify->add_option("input", opt.input, "Complex file (verify main)");
    verify->add_option("--dim", opt.dim, "Dimension d");
    verify->add_option("--verts", opt.verts, "Vertex count or maximum vertex count");
    verify->add_option("--trials", opt.trials, "Number of random trials");
    verify->add_option("--flips", opt.flips, "Flip budget per vertex (plane)");
    verify->add_option("--seed", opt.seed, "Random seed");
    verify->add_option("--box", opt.box, "Coordinate bound (vertex-figure)");
    verify->add_option("--format", opt.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    add_out(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(opt, out);
        }
        if (graph->parsed()) {
            return cmd_graph(opt, in, out);
        }
        if (mincut->parsed()) {
            return cmd_mincut(opt, in, out);
        }
        if (hull->parsed()) {
            return cmd_hull(opt, in, out, err);
        }
        return cmd_verify(opt, in, out);
    } catch (const ParseError& e) {
        err << "error: " << (opt.input.empty() ? "input" : opt.input) << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

} // namespace polycut::cli
