#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgrecon/graph.hpp"
#include "mgrecon/sampling.hpp"

namespace mgrecon {

using Index = std::uint32_t;
using Edge = std::array<Index, 2>;      ///< sorted, i < j
using Triangle = std::array<Index, 3>;  ///< sorted, i < j < k

/**
 * 2-skeleton of a simplicial complex on vertices 0..n_vertices-1.
 *
 * Edges and triangles are kept sorted lexicographically with sorted vertex
 * tuples; that order defines the edge indexing used by the homology code.
 * Higher simplices are never stored: H_0 and H_1 only depend on the
 * 2-skeleton.
 */
class SimplicialComplex2 {
public:
    SimplicialComplex2() = default;
    /// Sorts and deduplicates its input, then checks face closure.
    SimplicialComplex2(std::size_t n_vertices, std::vector<Edge> edges, std::vector<Triangle> triangles);

    std::size_t vertex_count() const { return n_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    std::optional<std::size_t> edge_index(Index i, Index j) const;
    bool contains_edge(Index i, Index j) const { return edge_index(i, j).has_value(); }
    bool contains_triangle(const Triangle& t) const;

    /// Empty string when the complex is well formed, otherwise a description
    /// of the first defect (out-of-range index, unsorted tuple, missing face).
    std::string check() const;

    /// Simplex-wise inclusion.
    bool is_subcomplex_of(const SimplicialComplex2& other) const;

    friend bool operator==(const SimplicialComplex2&, const SimplicialComplex2&) = default;

private:
    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
};

/// Dense symmetric distance matrix, +inf for unreachable pairs.
class MetricMatrix {
public:
    MetricMatrix() = default;
    explicit MetricMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return d_[i * n_ + j]; }

    static MetricMatrix euclidean(const std::vector<Point>& points);

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

/// Nerve of the closed eps-balls around the sample, truncated to dimension
/// two. Balls are convex, so the cover is good and the nerve has the
/// homotopy type of the union of balls.
SimplicialComplex2 cech_nerve(const Sample& sample, double eps);

struct NervePair {
    SimplicialComplex2 k1;
    SimplicialComplex2 k2;
};

/// (Cech(eps), Cech(xi * eps)); K1 is a subcomplex of K2.
NervePair nerve_pair(const Sample& sample, double eps, double xi);

/// All-pairs shortest paths on the 1-skeleton, edges weighted by their
/// Euclidean length.
MetricMatrix skeleton_geodesic_metric(const SimplicialComplex2& complex, const Sample& sample);

/// Rips 2-skeleton: an edge when d <= scale, a triangle when all three
/// pairwise distances are <= scale.
SimplicialComplex2 vietoris_rips(const MetricMatrix& metric, double scale);

struct ConjectureReport {
    bool holds = false;
    std::size_t b0_vr = 0;
    std::size_t b1_vr = 0;
    std::size_t b0_graph = 0;
    std::size_t b1_graph = 0;
    double eps = 0.0;
    double xi = 0.0;
    double gfs = 0.0;
    double eps_limit = 0.0;  ///< gfs / (2 (2 + xi))
    double vr_scale = 0.0;   ///< 2 (1 + xi) eps
    std::size_t sample_size = 0;
    std::size_t vr_edges = 0;
    std::size_t vr_triangles = 0;
};

/// Thrown by conjecture_test when eps is not below the conjectured bound.
class ThresholdError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Empirical check of the geodesic Rips conjecture for one graph: sample a
 * per-edge cover at eps, build Cech(eps), take the shortest-path metric of
 * its 1-skeleton and compare the Betti numbers of the Rips complex at scale
 * 2(1 + xi) eps with those of the graph. The outcome is reported, never
 * assumed.
 */
ConjectureReport conjecture_test(const MetricGraph& graph, double eps, std::uint64_t seed,
                                 SampleMode mode = SampleMode::Uniform, double gfs_step = 0.0);

}  // namespace mgrecon
