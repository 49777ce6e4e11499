#include "mgrecon/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include <fmt/format.h>

#include "mgrecon/complex.hpp"

namespace mgrecon {

namespace {

constexpr double kMedialTolerance = 5e-3;  // relative to eps

void require_planar(const Sample& sample, const char* where)
{
    sample.check_dimension();
    if (sample.dim() != 2)
        throw std::invalid_argument(fmt::format("{}: planar samples required, got dimension {}", where, sample.dim()));
}

Sample subsample(const Sample& sample, const std::vector<std::size_t>& indices)
{
    Sample out;
    for (std::size_t i : indices) {
        out.points.push_back(sample.points[i]);
        if (!sample.provenance.empty())
            out.provenance.push_back(sample.provenance[i]);
    }
    out.seed = sample.seed;
    return out;
}

std::vector<std::vector<std::size_t>> nerve_components(const SimplicialComplex2& nerve)
{
    std::vector<std::size_t> parent(nerve.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [i, j] : nerve.edges())
        parent[find(i)] = find(j);

    std::map<std::size_t, std::size_t> slot_of_root;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < nerve.vertex_count(); ++v) {
        const auto [it, fresh] = slot_of_root.emplace(find(v), groups.size());
        if (fresh)
            groups.emplace_back();
        groups[it->second].push_back(v);
    }
    return groups;
}

/// Exposed angular arcs [start, end] (radians, start in [0, 2pi)) of circle
/// `i`; a fully exposed circle is returned as a single arc of length 2pi.
std::vector<std::pair<double, double>> exposed_arcs(const std::vector<Point>& centers, std::size_t i, double eps)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::pair<double, double>> covered;
    for (std::size_t j = 0; j < centers.size(); ++j) {
        if (j == i)
            continue;
        const double d = euclidean_distance(centers[i], centers[j]);
        if (d >= 2.0 * eps)
            continue;
        if (d == 0.0) {
            if (j < i)
                return {};  // duplicate centre: its twin owns the circle
            continue;
        }
        const double phi = std::atan2(centers[j][1] - centers[i][1], centers[j][0] - centers[i][0]);
        const double half = std::acos(d / (2.0 * eps));
        double lo = phi - half;
        double hi = phi + half;
        lo -= two_pi * std::floor(lo / two_pi);
        hi = lo + 2.0 * half;
        if (hi > two_pi) {
            covered.emplace_back(lo, two_pi);
            covered.emplace_back(0.0, hi - two_pi);
        } else {
            covered.emplace_back(lo, hi);
        }
    }
    if (covered.empty())
        return {{0.0, two_pi}};

    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& c : covered) {
        if (!merged.empty() && c.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, c.second);
        else
            merged.push_back(c);
    }
    std::vector<std::pair<double, double>> arcs;
    for (std::size_t k = 0; k < merged.size(); ++k) {
        const double start = merged[k].second;
        const double end = k + 1 < merged.size() ? merged[k + 1].first : merged.front().first + two_pi;
        if (end > start)
            arcs.emplace_back(start, end);
    }
    return arcs;
}

}  // namespace

bool is_simple(const ClosedPolyline& polyline)
{
    const std::size_t n = polyline.size();
    if (n < 3)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (euclidean_distance(polyline.vertices[i], polyline.vertices[(i + 1) % n]) <= kTolerance)
            return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Segment si = polyline.segment(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            const SegmentRelation rel = segments_intersect(si, polyline.segment(j));
            if (adjacent ? rel != SegmentRelation::SharedEndpoint : rel != SegmentRelation::Disjoint)
                return false;
        }
    }
    return true;
}

std::vector<std::size_t> order_samples(const Sample& sample, OrderMode mode)
{
    if (sample.size() < 3)
        throw std::invalid_argument(fmt::format("order_samples: need at least 3 points, got {}", sample.size()));
    require_planar(sample, "order_samples");

    std::vector<std::size_t> order(sample.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (mode == OrderMode::Given)
        return order;

    std::vector<bool> used(sample.size(), false);
    used[0] = true;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Point& last = sample.points[order[k - 1]];
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < sample.size(); ++j) {
            if (used[j])
                continue;
            const double d = euclidean_distance(last, sample.points[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        order[k] = best;
    }

    ClosedPolyline chain;
    for (std::size_t i : order)
        chain.vertices.push_back(sample.points[i]);
    if (!is_simple(chain))
        throw CurveError("order_samples: nearest-neighbour chain is not a simple closed polyline");
    return order;
}

CurveReconstruction try_reconstruct_curve(const Sample& sample, double eps, OrderMode mode)
{
    if (!(eps > 0.0))
        throw std::invalid_argument(fmt::format("reconstruct_curve: eps must be positive, got {}", eps));
    if (sample.size() < 3)
        throw std::invalid_argument(fmt::format("reconstruct_curve: need at least 3 points, got {}", sample.size()));
    require_planar(sample, "reconstruct_curve");

    CurveReconstruction out;
    CurveReport& report = out.report;
    const SimplicialComplex2 nerve = cech_nerve(sample, eps);
    report.nerve_betti = betti_numbers(nerve);
    const auto groups = nerve_components(nerve);
    report.components = groups.size();
    report.simple = true;
    report.edges_within_2eps = true;
    bool ok = true;

    for (std::size_t c = 0; c < groups.size(); ++c) {
        const Sample part = subsample(sample, groups[c]);
        if (part.size() < 3) {
            report.diagnostics.push_back(
                fmt::format("component {}: {} sample(s) cannot form a closed curve", c, part.size()));
            ok = false;
            continue;
        }
        std::vector<std::size_t> order;
        try {
            order = order_samples(part, mode);
        } catch (const CurveError& e) {
            report.diagnostics.push_back(fmt::format("component {}: {}", c, e.what()));
            report.simple = false;
            ok = false;
            continue;
        }
        ClosedPolyline polyline;
        for (std::size_t i : order)
            polyline.vertices.push_back(part.points[i]);

        if (!is_simple(polyline)) {
            report.simple = false;
            report.diagnostics.push_back(fmt::format("component {}: polyline is not simple", c));
            ok = false;
        }
        for (std::size_t i = 0; i < polyline.size(); ++i) {
            const Segment s = polyline.segment(i);
            const double len = euclidean_distance(s.a, s.b);
            report.max_edge_length = std::max(report.max_edge_length, len);
            if (len > 2.0 * eps + kTolerance) {
                if (report.edges_within_2eps)
                    report.diagnostics.push_back(
                        fmt::format("component {}: edge {} has length {} > 2 eps = {}", c, i, len, 2.0 * eps));
                report.edges_within_2eps = false;
                ok = false;
            }
        }
        const Betti b = betti_numbers(cech_nerve(part, eps));
        if (b != Betti{1, 1}) {
            report.diagnostics.push_back(
                fmt::format("component {}: nerve Betti numbers ({}, {}), expected (1, 1)", c, b.b0, b.b1));
            ok = false;
        }
        out.polylines.push_back(std::move(polyline));
    }
    report.accepted = ok;
    return out;
}

CurveReconstruction reconstruct_curve(const Sample& sample, double eps, OrderMode mode)
{
    CurveReconstruction out = try_reconstruct_curve(sample, eps, mode);
    if (!out.report.accepted) {
        std::string msg = "reconstruction rejected";
        for (const auto& d : out.report.diagnostics)
            msg += "\n  - " + d;
        throw CurveError(msg);
    }
    return out;
}

std::vector<Point> union_boundary_points(const std::vector<Point>& centers, double eps, std::size_t budget)
{
    std::vector<std::vector<std::pair<double, double>>> arcs(centers.size());
    double total = 0.0;
    std::size_t forced = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        arcs[i] = exposed_arcs(centers, i, eps);
        for (const auto& [a, b] : arcs[i]) {
            total += b - a;
            forced += 2;
        }
    }
    const std::size_t spread = budget > forced ? budget - forced : 0;

    std::vector<Point> out;
    out.reserve(budget + forced);
    for (std::size_t i = 0; i < centers.size(); ++i) {
        for (const auto& [a, b] : arcs[i]) {
            const auto interior =
                total > 0.0 ? static_cast<std::size_t>(std::llround(static_cast<double>(spread) * (b - a) / total)) : 0;
            const std::size_t steps = interior + 1;
            for (std::size_t k = 0; k <= steps; ++k) {
                const double theta = a + (b - a) * static_cast<double>(k) / static_cast<double>(steps);
                Point p{centers[i][0] + eps * std::cos(theta), centers[i][1] + eps * std::sin(theta)};
                const bool exposed = std::all_of(centers.begin(), centers.end(), [&](const Point& c) {
                    return euclidean_distance(p, c) >= eps - kTolerance;
                });
                if (exposed)
                    out.push_back(std::move(p));
            }
        }
    }
    return out;
}

MedialAxisReport validate_medial_axis(const ClosedPolyline& polyline, const Sample& sample, double eps,
                                      std::size_t n_probe, std::size_t n_boundary)
{
    if (polyline.size() < 3)
        throw std::invalid_argument("validate_medial_axis: a closed polyline needs at least 3 vertices");
    if (!(eps > 0.0))
        throw std::invalid_argument("validate_medial_axis: eps must be positive");
    require_planar(sample, "validate_medial_axis");

    MedialAxisReport report;
    const std::vector<Point> boundary = union_boundary_points(sample.points, eps, n_boundary);
    report.boundary_points = boundary.size();
    std::vector<bool> inside(boundary.size());
    for (std::size_t b = 0; b < boundary.size(); ++b)
        inside[b] = point_in_polygon(boundary[b], polyline.vertices);

    constexpr double kInf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < polyline.size(); ++i) {
        const Segment s = polyline.segment(i);
        for (std::size_t j = 1; j <= n_probe; ++j) {
            const double frac = static_cast<double>(j) / static_cast<double>(n_probe + 1);
            const Point z = s.a + frac * (s.b - s.a);
            ++report.probes;

            double nearest_center = kInf;
            for (const Point& c : sample.points)
                nearest_center = std::min(nearest_center, euclidean_distance(z, c));
            double d_in = kInf;
            double d_out = kInf;
            for (std::size_t b = 0; b < boundary.size(); ++b) {
                double& side = inside[b] ? d_in : d_out;
                side = std::min(side, euclidean_distance(z, boundary[b]));
            }
            const bool covered = nearest_center <= eps + kTolerance;
            const bool two_sided = d_in < kInf && d_out < kInf;
            const double asymmetry = two_sided ? std::abs(d_in - d_out) : kInf;
            report.max_asymmetry = std::max(report.max_asymmetry, asymmetry);
            if (covered && asymmetry <= kMedialTolerance * eps)
                ++report.passed;
        }
    }
    report.pass_fraction =
        report.probes == 0 ? 0.0 : static_cast<double>(report.passed) / static_cast<double>(report.probes);
    return report;
}

}  // namespace mgrecon
