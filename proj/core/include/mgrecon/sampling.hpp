#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mgrecon/geometry.hpp"
#include "mgrecon/graph.hpp"

namespace mgrecon {

/// Where on the ground-truth graph a sample point came from.
struct Provenance {
    std::size_t edge = 0;
    double t = 0.0;
};

/**
 * Finite ordered point sample.
 *
 * `provenance` is either empty or parallel to `points`; an entry may still be
 * nullopt (isolated graph vertices, or points read without annotations).
 */
struct Sample {
    std::vector<Point> points;
    std::vector<std::optional<Provenance>> provenance;
    std::optional<std::uint64_t> seed;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    std::size_t dim() const { return points.empty() ? 0 : points.front().dim(); }
    std::optional<Provenance> provenance_of(std::size_t i) const
    {
        return provenance.empty() ? std::nullopt : provenance[i];
    }
    /// Throws std::invalid_argument when points disagree in dimension.
    void check_dimension() const;
};

enum class SampleMode { Uniform, Jittered };

struct UncoveredInterval {
    std::size_t edge = 0;
    double lo = 0.0;  ///< arclength, open interval (lo, hi)
    double hi = 0.0;
};

struct CoverReport {
    bool covered = false;
    std::vector<UncoveredInterval> uncovered_intervals;
    std::vector<std::size_t> uncovered_vertices;  ///< isolated vertices with no ball
    double max_gap = 0.0;
};

struct CoverageEstimate {
    double probability = 0.0;
    double half_width = 0.0;  ///< 95% normal-approximation half-width
    std::size_t trials = 0;
    std::size_t successes = 0;
};

/// Per-edge equally spaced cover with spacing <= 1.98*eps, optionally
/// jittered. Each graph vertex appears once. Every edge is covered by the
/// balls of points lying on that same edge.
Sample sample_cover(const MetricGraph& graph, double eps, SampleMode mode, std::uint64_t seed = 0);

/// Exact check that the union of closed eps-balls contains the graph.
/// Gaps no wider than 2*kTolerance are treated as rounding and ignored.
CoverReport verify_cover(const Sample& sample, double eps, const MetricGraph& graph);

/// n i.i.d. points, uniform with respect to arclength.
Sample sample_uniform_random(const MetricGraph& graph, std::size_t n, std::uint64_t seed);

/// Monte Carlo fraction of random samples of size n that cover the graph.
/// Trial i uses a seed derived from (seed, i), so the result does not depend
/// on how trials are scheduled across threads.
CoverageEstimate estimate_coverage_probability(const MetricGraph& graph, double eps, std::size_t n,
                                               std::size_t trials, std::uint64_t seed);

/// Deterministic per-trial seed stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace mgrecon
