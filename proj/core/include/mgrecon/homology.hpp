#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgrecon/complex.hpp"

namespace mgrecon {

/// Sparse GF(2) vector: strictly increasing indices of its nonzero entries.
using Gf2Column = std::vector<Index>;

/// a + b over GF(2) (symmetric difference of supports).
Gf2Column gf2_add(const Gf2Column& a, const Gf2Column& b);

/**
 * Incrementally maintained basis of a GF(2) column space.
 *
 * Columns are kept reduced so that no two share their lowest one (largest
 * nonzero index); reducing a vector against the basis is then a single
 * left-to-right pass of additions.
 */
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t rows = 0) : pivot_of_low_(rows, kNone) {}

    /// Residual of v after elimination; empty iff v is in the span.
    Gf2Column reduce(Gf2Column v) const;
    bool contains(const Gf2Column& v) const { return reduce(v).empty(); }
    /// Adds v if it is independent of the current basis. Returns whether it was.
    bool insert(Gf2Column v);
    std::size_t rank() const { return columns_.size(); }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<Gf2Column> columns_;
    std::vector<std::size_t> pivot_of_low_;
};

/// Column-sparse boundary operators. d1 has one column per edge (rows are
/// vertices); d2 has one column per triangle (rows are edge indices).
struct BoundaryMatrices {
    std::vector<Gf2Column> d1;
    std::vector<Gf2Column> d2;
};

BoundaryMatrices boundary_matrices(const SimplicialComplex2& complex);

/// Basis of B_1 = im d2, as a reducer over the complex's edge indexing.
Gf2Basis boundary_space(const SimplicialComplex2& complex);

struct Betti {
    std::size_t b0 = 0;
    std::size_t b1 = 0;
    friend bool operator==(const Betti&, const Betti&) = default;
};

/// b0 and b1 over GF(2). Higher Betti numbers are not computed (the complex
/// is a 2-skeleton, so they would not be meaningful anyway).
Betti betti_numbers(const SimplicialComplex2& complex);

/// Representatives of a basis of H_1, each a cycle given by edge indices.
struct H1Basis {
    std::vector<Gf2Column> cycles;
};

/// Fundamental cycles of a BFS spanning forest, filtered to an independent
/// set modulo boundaries; the result has exactly b1 cycles.
H1Basis h1_basis(const SimplicialComplex2& complex);

/// Re-expresses a cycle of `from` in the edge indexing of `to`. Throws if an
/// edge of the cycle is missing from `to`.
Gf2Column push_forward(const Gf2Column& chain, const SimplicialComplex2& from, const SimplicialComplex2& to);

/// Rank of the map H_1(k1) -> H_1(k2) induced by inclusion. Throws
/// std::invalid_argument unless k1 is a subcomplex of k2.
std::size_t image_rank(const SimplicialComplex2& k1, const SimplicialComplex2& k2);

enum class Algorithm1Method { Literal, ImageRank };

struct Algorithm1Result {
    std::size_t b1_estimate = 0;
    std::size_t b1_k1 = 0;
    std::size_t b1_k2 = 0;
    std::size_t collapsed = 0;  ///< dim ker i_* = b1_k1 - b1_estimate
    Algorithm1Method method = Algorithm1Method::Literal;
    double eps = 0.0;
    double xi = 0.0;
    std::size_t k1_edges = 0;
    std::size_t k1_triangles = 0;
    std::size_t k2_edges = 0;
    std::size_t k2_triangles = 0;
    /// Literal method only: representatives of the surviving classes.
    std::vector<Gf2Column> survivors;
    std::vector<std::string> warnings;
};

/**
 * First Betti number estimate from a sample via the two-scale nerves
 * K1 = Cech(eps) and K2 = Cech(xi * eps).
 *
 * Literal: walk the H_1(K1) basis in ascending order of each cycle's smallest
 * edge, drop ("collapse") cycles that bound in K2, and return the rank of the
 * rest in H_1(K2). ImageRank: rank of i_* directly. Both return the same
 * number. When `eps_threshold` (gfs/xi of a known ground truth) is given and
 * eps is not below it, a warning is attached to the result.
 */
Algorithm1Result algorithm1(const Sample& sample, double eps, double xi, Algorithm1Method method,
                            std::optional<double> eps_threshold = std::nullopt);

/// Same computation on precomputed nerves.
Algorithm1Result algorithm1(const NervePair& nerves, double eps, double xi, Algorithm1Method method);

const char* to_string(Algorithm1Method method);

}  // namespace mgrecon
