#pragma once

#include <cstddef>
#include <utility>

#include "mgrecon/complex.hpp"
#include "mgrecon/graph.hpp"

// Brute-force reference implementations. They deliberately share no code
// with the library beyond the plain data types, so that agreement between
// the two is evidence rather than tautology. Nothing here is fast.
namespace mgrecon::oracles {

/// Half the smallest Euclidean distance over all pairs of discretised graph
/// points whose geodesic distance is at least l. Both arguments are
/// discretised. Requires fine_step <= 1e-3 * l.
double gfs_bruteforce(const EmbeddedMetricGraph& graph, double fine_step);

/// (b0, b1) by dense GF(2) elimination. Requires at most 2000 edges.
std::pair<std::size_t, std::size_t> betti_bruteforce(const SimplicialComplex2& complex);

/// Rank of H_1(k1) -> H_1(k2) by enumerating all 2^E(k1) edge vectors.
/// Requires at most 20 edges in k1.
std::size_t image_rank_bruteforce(const SimplicialComplex2& k1, const SimplicialComplex2& k2);

}  // namespace mgrecon::oracles
