#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgrecon/geometry.hpp"
#include "mgrecon/homology.hpp"
#include "mgrecon/sampling.hpp"

namespace mgrecon {

/// Cyclic polyline; the closing segment from the last vertex back to the
/// first is implicit.
struct ClosedPolyline {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }
    Segment segment(std::size_t i) const { return Segment{vertices[i], vertices[(i + 1) % vertices.size()]}; }
};

enum class OrderMode { Given, NearestNeighbor };

class CurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True when consecutive vertices differ, adjacent segments meet only at
/// their shared vertex and non-adjacent segments are disjoint. Planar only.
bool is_simple(const ClosedPolyline& polyline);

/**
 * Cyclic order of the sample. `Given` keeps the input order. `NearestNeighbor`
 * chains greedily from point 0 (ties go to the lower index) and throws
 * CurveError when the closed chain is not simple instead of guessing.
 */
std::vector<std::size_t> order_samples(const Sample& sample, OrderMode mode);

struct CurveReport {
    bool accepted = false;
    bool simple = false;
    bool edges_within_2eps = false;
    double max_edge_length = 0.0;
    Betti nerve_betti;
    std::size_t components = 0;
    std::vector<std::string> diagnostics;
};

struct CurveReconstruction {
    /// One closed polyline per connected component of the nerve.
    std::vector<ClosedPolyline> polylines;
    CurveReport report;
};

/**
 * Closed polyline through the samples of each nerve component.
 *
 * A component is accepted when it has at least three samples, its polyline is
 * simple with every edge of length <= 2 eps, and its Cech nerve at eps has
 * Betti numbers (1, 1). Throws CurveError (with the filled-in report in
 * the message) when any check fails; use try_reconstruct_curve to inspect a
 * rejected report instead.
 */
CurveReconstruction reconstruct_curve(const Sample& sample, double eps, OrderMode mode);

/// Non-throwing variant: `report.accepted` tells whether it succeeded.
CurveReconstruction try_reconstruct_curve(const Sample& sample, double eps, OrderMode mode);

struct MedialAxisReport {
    std::size_t boundary_points = 0;
    std::size_t probes = 0;
    std::size_t passed = 0;
    double pass_fraction = 0.0;
    double max_asymmetry = 0.0;  ///< worst |d_inside - d_outside| over probes
};

/// Points of the boundary of the union of closed eps-balls: each lies on its
/// own sphere and not inside any other ball. Arc endpoints (where two circles
/// cross) are always included; the remaining budget is spread by arc length.
std::vector<Point> union_boundary_points(const std::vector<Point>& centers, double eps, std::size_t budget);

/**
 * Numerical medial-axis certificate for a planar polyline.
 *
 * For n_probe interior points z of every segment: z must lie in the union of
 * eps-balls, and its nearest boundary points inside and outside the polyline
 * must be equidistant within 5e-3 eps.
 */
MedialAxisReport validate_medial_axis(const ClosedPolyline& polyline, const Sample& sample, double eps,
                                      std::size_t n_probe, std::size_t n_boundary = 10000);

}  // namespace mgrecon
