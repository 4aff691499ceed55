#include "polycut/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace polycut {

namespace {

struct Line
{
    int number;
    std::vector<std::string> tokens;
};

// Non-blank lines, split on whitespace, with their 1-based line numbers.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        std::istringstream in{std::string(text.substr(pos, end - pos))};
        Line line{number, {}};
        for (std::string tok; in >> tok;) {
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

long long parse_int(const std::string& tok, int line)
{
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    return value;
}

void expect_tokens(const Line& line, std::size_t count, const char* what)
{
    if (line.tokens.size() != count) {
        throw ParseError(line.number, std::string("expected ") + std::to_string(count) + " " +
                                          what + ", got " + std::to_string(line.tokens.size()) +
                                          " tokens");
    }
}

int line_of_offset(std::string_view text, std::size_t byte)
{
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

Rational parse_rational(const std::string& tok, int line)
{
    std::string_view s = tok;
    std::string_view body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
    const std::size_t slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
        throw ParseError(line, "expected a rational p/q or an integer, got '" + tok + "'");
    }
    if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; })) {
        throw ParseError(line, "zero denominator in '" + tok + "'");
    }
    std::string canonical = (s[0] == '-' ? "-" : "") + std::string(num);
    if (slash != std::string_view::npos) {
        canonical += "/" + std::string(den);
    }
    Rational r(canonical);
    return r;
}

} // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

nlohmann::json complex_to_json(const BoundaryComplex& c)
{
    nlohmann::json facets = nlohmann::json::array();
    for (const Facet& f : c.facets()) {
        facets.push_back(f);
    }
    return {{"dim", c.dim()}, {"n", c.num_vertices()}, {"facets", std::move(facets)}};
}

std::string dump_line(const nlohmann::json& j)
{
    return j.dump() + "\n";
}

std::string write_complex_json(const BoundaryComplex& c)
{
    return dump_line(complex_to_json(c));
}

std::string write_complex_text(const BoundaryComplex& c)
{
    std::ostringstream out;
    out << c.dim() << ' ' << c.num_vertices() << '\n';
    for (const Facet& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            out << (i ? " " : "") << f[i];
        }
        out << '\n';
    }
    return out.str();
}

BoundaryComplex parse_complex(std::string_view text)
{
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) {
        throw ParseError(0, "empty complex file");
    }
    int dim = 0, n = 0;
    std::vector<Facet> facets;
    if (text[start] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(line_of_offset(text, e.byte), e.what());
        }
        try {
            dim = j.at("dim").get<int>();
            n = j.at("n").get<int>();
            for (const auto& f : j.at("facets")) {
                facets.push_back(f.get<Facet>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("complex JSON: ") + e.what());
        }
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (static_cast<int>(facets[i].size()) != dim) {
                throw ParseError(0, "complex JSON: facet " + std::to_string(i) + " has " +
                                        std::to_string(facets[i].size()) + " vertices, expected " +
                                        std::to_string(dim));
            }
            for (VertexId v : facets[i]) {
                if (v < 0 || v >= n) {
                    throw ParseError(0, "complex JSON: facet " + std::to_string(i) +
                                            " has vertex " + std::to_string(v) + " out of range");
                }
            }
        }
    } else {
        const auto lines = tokenize(text);
        expect_tokens(lines.front(), 2, "header values 'd n'");
        dim = static_cast<int>(parse_int(lines.front().tokens[0], lines.front().number));
        n = static_cast<int>(parse_int(lines.front().tokens[1], lines.front().number));
        if (dim < 2 || n < 0) {
            throw ParseError(lines.front().number, "header needs d >= 2 and n >= 0");
        }
        for (std::size_t i = 1; i < lines.size(); ++i) {
            expect_tokens(lines[i], static_cast<std::size_t>(dim), "facet vertices");
            Facet f;
            for (const auto& tok : lines[i].tokens) {
                const long long v = parse_int(tok, lines[i].number);
                if (v < 0 || v >= n) {
                    throw ParseError(lines[i].number, "vertex " + tok + " out of range 0.." +
                                                          std::to_string(n - 1));
                }
                f.push_back(static_cast<VertexId>(v));
            }
            facets.push_back(std::move(f));
        }
    }
    if (dim < 2) {
        throw ParseError(0, "complex dimension must be at least 2");
    }
    return BoundaryComplex(dim, n, std::move(facets));
}

std::string write_graph_text(const Graph& g)
{
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(0, "empty graph file");
    }
    expect_tokens(lines.front(), 2, "header values 'n m'");
    const long long n = parse_int(lines.front().tokens[0], lines.front().number);
    const long long m = parse_int(lines.front().tokens[1], lines.front().number);
    if (n < 0 || m < 0) {
        throw ParseError(lines.front().number, "negative count in header");
    }
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw ParseError(lines.back().number, "header promises " + std::to_string(m) +
                                                  " edges, found " + std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    std::vector<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_tokens(lines[i], 2, "endpoints 'u v'");
        const long long u = parse_int(lines[i].tokens[0], lines[i].number);
        const long long v = parse_int(lines[i].tokens[1], lines[i].number);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(lines[i].number, "endpoint out of range 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            throw ParseError(lines[i].number, "self-loop");
        }
        const Edge e = make_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
            throw ParseError(lines[i].number, "duplicate edge");
        }
        seen.push_back(e);
        edges.push_back(e);
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_points_text(const PointConfiguration& c)
{
    std::ostringstream out;
    out << c.dim << ' ' << c.size() << '\n';
    for (const auto& p : c.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            out << (j ? " " : "") << p[j].str();
        }
        out << '\n';
    }
    return out.str();
}

PointConfiguration parse_points(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(0, "empty points file");
    }
    expect_tokens(lines.front(), 2, "header values 'd n'");
    const long long d = parse_int(lines.front().tokens[0], lines.front().number);
    const long long n = parse_int(lines.front().tokens[1], lines.front().number);
    if (d < 1 || n < 0) {
        throw ParseError(lines.front().number, "header needs d >= 1 and n >= 0");
    }
    if (static_cast<long long>(lines.size()) - 1 != n) {
        throw ParseError(lines.back().number, "header promises " + std::to_string(n) +
                                                  " points, found " + std::to_string(lines.size() - 1));
    }
    PointConfiguration c{static_cast<int>(d), {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_tokens(lines[i], static_cast<std::size_t>(d), "coordinates");
        RationalPoint p;
        for (const auto& tok : lines[i].tokens) {
            p.push_back(parse_rational(tok, lines[i].number));
        }
        c.points.push_back(std::move(p));
    }
    return c;
}

nlohmann::json cut_to_json(const Cut& cut)
{
    nlohmann::json crossing = nlohmann::json::array();
    for (const Edge& e : cut.crossing) {
        crossing.push_back({e.u, e.v});
    }
    return {{"size", cut.size()}, {"trivial", cut.trivial}, {"side", cut.side},
            {"crossing", std::move(crossing)}};
}

} // namespace polycut
