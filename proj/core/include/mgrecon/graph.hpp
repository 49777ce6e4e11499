#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgrecon/geometry.hpp"

namespace mgrecon {

using GraphEdge = std::array<std::size_t, 2>;

/// Plain description of an embedded graph with straight-line edges. Nothing
/// is checked here; see validate() and MetricGraph.
struct EmbeddedMetricGraph {
    std::size_t dim = 2;
    std::vector<Point> vertices;
    std::vector<GraphEdge> edges;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks dimensions, index ranges, self-loops, duplicate edges, positive
/// lengths and that edges meet only at shared endpoints. Every violation is
/// reported, not just the first.
ValidationReport validate(const EmbeddedMetricGraph& graph);

class GraphValidationError : public std::runtime_error {
public:
    explicit GraphValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// A point of the graph, addressed by edge and arclength from the edge's
/// first endpoint.
struct GraphPoint {
    std::size_t edge = 0;
    double t = 0.0;
};

struct FeatureSizeEstimate {
    double estimate = 0.0;
    double error_bound = 0.0;
};

struct GraphBetti {
    std::size_t b0 = 0;
    std::size_t b1 = 0;
};

/**
 * Validated, immutable embedded metric graph.
 *
 * Construction validates the description (throwing GraphValidationError) and
 * precomputes edge lengths and all-pairs vertex shortest paths, so every
 * query below is read-only and safe to share between threads.
 */
class MetricGraph {
public:
    explicit MetricGraph(EmbeddedMetricGraph graph);

    const EmbeddedMetricGraph& description() const { return graph_; }
    std::size_t dim() const { return graph_.dim; }
    std::size_t vertex_count() const { return graph_.vertices.size(); }
    std::size_t edge_count() const { return graph_.edges.size(); }
    const Point& vertex(std::size_t i) const { return graph_.vertices[i]; }
    const GraphEdge& edge(std::size_t e) const { return graph_.edges[e]; }
    double edge_length(std::size_t e) const { return lengths_[e]; }
    double total_length() const;
    Segment segment(std::size_t e) const;

    /// Shortest path length between two vertices, +inf if disconnected.
    double vertex_distance(std::size_t u, std::size_t v) const { return vertex_dist_[u * vertex_count() + v]; }

    /// Length l of the shortest edge. Throws std::domain_error without edges.
    double shortest_edge_length() const;

    double geodesic_distance(const GraphPoint& a, const GraphPoint& b) const;

    /// Largest 1/sin(alpha/2) over acute angles alpha between edges sharing a
    /// vertex. Non-acute pairs and graphs without such pairs give sqrt(2).
    double xi() const;

    /// Geodesic feature size, i.e. half the smallest Euclidean distance
    /// between graph points at geodesic distance >= l. One argument is
    /// discretised at arclength step <= `step`, the other is optimised
    /// exactly along each edge; the reported error bound is 2*step.
    FeatureSizeEstimate gfs(double step) const;

    Point point_at(const GraphPoint& gp) const;

    /// Components and cycle rank (m - n + b0) of the graph itself.
    GraphBetti betti() const;

private:
    void check_point(const GraphPoint& gp) const;

    EmbeddedMetricGraph graph_;
    std::vector<double> lengths_;
    std::vector<double> vertex_dist_;
};

}  // namespace mgrecon
