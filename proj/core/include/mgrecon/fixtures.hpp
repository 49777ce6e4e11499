#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mgrecon/complex.hpp"
#include "mgrecon/graph.hpp"

// Standard ground-truth graphs and random instance generators shared by the
// test suites, the benchmarks and `mgrecon verify-oracles`.
namespace mgrecon::fixtures {

EmbeddedMetricGraph unit_segment();
EmbeddedMetricGraph unit_triangle();
EmbeddedMetricGraph unit_square();
EmbeddedMetricGraph square_with_diagonal();
EmbeddedMetricGraph two_squares();
EmbeddedMetricGraph h_tree();
EmbeddedMetricGraph regular_hexagon();
/// Three unit arms from the origin at 0, 30 and 180 degrees.
EmbeddedMetricGraph star_30();

struct NamedGraph {
    std::string name;
    EmbeddedMetricGraph graph;
};

/// triangle, square, square-with-diagonal, two-squares, h-tree, hexagon.
std::vector<NamedGraph> standard_suite();

/// Looks up a fixture by name (suite names plus "segment" and "star30").
EmbeddedMetricGraph by_name(const std::string& name);

/// Random planar straight-line graph with well separated vertices and no
/// very thin angles (xi <= max_xi), so that cover samples stay small.
EmbeddedMetricGraph random_planar_graph(std::mt19937_64& rng, double max_xi = 6.0);

/// Random complex on n vertices: each pair is an edge with p_edge, each
/// 3-clique a triangle with p_triangle.
SimplicialComplex2 random_complex(std::mt19937_64& rng, std::size_t n, double p_edge, double p_triangle);

/// Random K1 within a random K2 on the same vertices, E(K1) <= max_k1_edges.
NervePair random_nested_pair(std::mt19937_64& rng, std::size_t n, std::size_t max_k1_edges);

/// n uniform points in [0, side]^dim.
std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim, double side);

}  // namespace mgrecon::fixtures
