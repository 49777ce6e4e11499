#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mgrecon/complex.hpp"
#include "mgrecon/curve.hpp"
#include "mgrecon/graph.hpp"
#include "mgrecon/sampling.hpp"

namespace mgrecon::io {

/// Malformed input. The message names the source and the line or JSON field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph files: {"dim": d, "vertices": [[x, y, ...], ...], "edges": [[i, j], ...]}
EmbeddedMetricGraph read_graph(std::istream& in, const std::string& source = "<graph>");
EmbeddedMetricGraph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const EmbeddedMetricGraph& graph);

// Points files: one point per line, "x,y[,...]", optionally followed by
// "# edge=<i> t=<v>". Blank lines and lines starting with '#' are skipped.
Sample read_points(std::istream& in, const std::string& source = "<points>");
Sample read_points_file(const std::filesystem::path& path);
void write_points(std::ostream& out, const Sample& sample, bool with_provenance = true);

// Closed polylines use the points format behind a "# polyline closed" header.
void write_polyline(std::ostream& out, const ClosedPolyline& polyline);
/// Reads a points file and requires the closed-polyline header.
ClosedPolyline read_polyline(std::istream& in, const std::string& source = "<polyline>");
ClosedPolyline read_polyline_file(const std::filesystem::path& path);

// Complex files: "v <i>", "e <i> <j>", "t <i> <j> <k>", vertices first, then
// edges, then triangles, each block in lexicographic order.
void write_complex(std::ostream& out, const SimplicialComplex2& complex);
SimplicialComplex2 read_complex(std::istream& in, const std::string& source = "<complex>");
SimplicialComplex2 read_complex_file(const std::filesystem::path& path);

/// Shortest round-trip decimal representation.
std::string format_real(double value);

}  // namespace mgrecon::io
