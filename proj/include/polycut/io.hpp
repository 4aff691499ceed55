#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "polycut/complex.hpp"
#include "polycut/cuts.hpp"
#include "polycut/hull.hpp"

namespace polycut {

/// Malformed input file. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what);

    int line() const { return line_; }

private:
    int line_;
};

// Complex files: JSON {"dim","facets","n"} or text "d n" followed by one facet per line.
nlohmann::json complex_to_json(const BoundaryComplex& c);
std::string write_complex_json(const BoundaryComplex& c);
std::string write_complex_text(const BoundaryComplex& c);
/// Accepts either form; JSON is recognized by a leading '{'.
BoundaryComplex parse_complex(std::string_view text);

// Graph files: "n m" followed by m lines "u v" with u < v.
std::string write_graph_text(const Graph& g);
Graph parse_graph(std::string_view text);

// Point files: "d n" followed by n lines of d rationals "p/q" or integers.
std::string write_points_text(const PointConfiguration& c);
PointConfiguration parse_points(std::string_view text);

nlohmann::json cut_to_json(const Cut& cut);

/// Compact JSON dump (keys sorted) plus trailing newline.
std::string dump_line(const nlohmann::json& j);

} // namespace polycut
