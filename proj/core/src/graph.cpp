#include "mgrecon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

#include <fmt/format.h>

namespace mgrecon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join_violations(const ValidationReport& report)
{
    std::string msg = "invalid embedded metric graph";
    for (const auto& v : report.violations)
        msg += "\n  - " + v;
    return msg;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

GraphValidationError::GraphValidationError(ValidationReport report)
    : std::runtime_error(join_violations(report)), report_(std::move(report))
{
}

ValidationReport validate(const EmbeddedMetricGraph& graph)
{
    ValidationReport report;
    auto& out = report.violations;
    const std::size_t n = graph.vertices.size();

    if (graph.dim < 2)
        out.push_back(fmt::format("dimension must be >= 2, got {}", graph.dim));

    bool vertices_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = graph.vertices[i];
        if (p.dim() != graph.dim) {
            out.push_back(fmt::format("vertex {}: has {} coordinates, expected {}", i, p.dim(), graph.dim));
            vertices_ok = false;
        } else if (!p.is_finite()) {
            out.push_back(fmt::format("vertex {}: non-finite coordinate", i));
            vertices_ok = false;
        }
    }
    if (!vertices_ok)
        return report;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (euclidean_distance(graph.vertices[i], graph.vertices[j]) <= kTolerance)
                out.push_back(fmt::format("vertices {} and {} coincide", i, j));

    std::vector<bool> edge_ok(graph.edges.size(), true);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto [u, v] = graph.edges[e];
        if (u >= n || v >= n) {
            out.push_back(fmt::format("edge {} ({},{}): vertex index out of range (n = {})", e, u, v, n));
            edge_ok[e] = false;
            continue;
        }
        if (u == v) {
            out.push_back(fmt::format("edge {} ({},{}): self-loop", e, u, v));
            edge_ok[e] = false;
            continue;
        }
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            out.push_back(fmt::format("edge {} ({},{}): duplicate edge", e, u, v));
            edge_ok[e] = false;
            continue;
        }
        if (euclidean_distance(graph.vertices[u], graph.vertices[v]) <= kTolerance) {
            out.push_back(fmt::format("edge {} ({},{}): zero length", e, u, v));
            edge_ok[e] = false;
            continue;
        }
        ++degree[u];
        ++degree[v];
    }

    const auto segment_of = [&](std::size_t e) {
        return Segment{graph.vertices[graph.edges[e][0]], graph.vertices[graph.edges[e][1]]};
    };
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        if (!edge_ok[e])
            continue;
        const Segment se = segment_of(e);
        for (std::size_t f = e + 1; f < graph.edges.size(); ++f) {
            if (!edge_ok[f])
                continue;
            const auto& a = graph.edges[e];
            const auto& b = graph.edges[f];
            const bool share = a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
            const SegmentRelation rel = segment_contact(se, segment_of(f));
            if (share && rel == SegmentRelation::Intersecting)
                out.push_back(fmt::format("edges {} and {} overlap beyond their shared vertex", e, f));
            else if (!share && rel != SegmentRelation::Disjoint)
                out.push_back(fmt::format("edges {} and {} intersect at a non-vertex point: not an embedding", e, f));
        }
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 0 && point_segment_distance(graph.vertices[v], se) <= kTolerance)
                out.push_back(fmt::format("isolated vertex {} lies on edge {}", v, e));
    }
    return report;
}

MetricGraph::MetricGraph(EmbeddedMetricGraph graph) : graph_(std::move(graph))
{
    ValidationReport report = validate(graph_);
    if (!report.ok())
        throw GraphValidationError(std::move(report));

    lengths_.reserve(graph_.edges.size());
    for (const auto& [u, v] : graph_.edges)
        lengths_.push_back(euclidean_distance(graph_.vertices[u], graph_.vertices[v]));

    // Floyd-Warshall; graphs are small compared to samples.
    const std::size_t n = vertex_count();
    vertex_dist_.assign(n * n, kInf);
    for (std::size_t i = 0; i < n; ++i)
        vertex_dist_[i * n + i] = 0.0;
    for (std::size_t e = 0; e < graph_.edges.size(); ++e) {
        const auto [u, v] = graph_.edges[e];
        vertex_dist_[u * n + v] = std::min(vertex_dist_[u * n + v], lengths_[e]);
        vertex_dist_[v * n + u] = vertex_dist_[u * n + v];
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = vertex_dist_[i * n + k];
            if (dik == kInf)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double through = dik + vertex_dist_[k * n + j];
                if (through < vertex_dist_[i * n + j])
                    vertex_dist_[i * n + j] = through;
            }
        }
}

double MetricGraph::total_length() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0.0); }

Segment MetricGraph::segment(std::size_t e) const
{
    return Segment{graph_.vertices[graph_.edges[e][0]], graph_.vertices[graph_.edges[e][1]]};
}

double MetricGraph::shortest_edge_length() const
{
    if (lengths_.empty())
        throw std::domain_error("shortest_edge_length: graph has no edges");
    return *std::min_element(lengths_.begin(), lengths_.end());
}

void MetricGraph::check_point(const GraphPoint& gp) const
{
    if (gp.edge >= edge_count())
        throw std::out_of_range(fmt::format("graph point: edge {} out of range ({} edges)", gp.edge, edge_count()));
    if (!(gp.t >= -kTolerance && gp.t <= lengths_[gp.edge] + kTolerance))
        throw std::out_of_range(
            fmt::format("graph point: t = {} outside [0, {}] on edge {}", gp.t, lengths_[gp.edge], gp.edge));
}

double MetricGraph::geodesic_distance(const GraphPoint& a, const GraphPoint& b) const
{
    check_point(a);
    check_point(b);
    const double la = lengths_[a.edge];
    const double lb = lengths_[b.edge];
    const double ta = std::clamp(a.t, 0.0, la);
    const double tb = std::clamp(b.t, 0.0, lb);
    const auto [au, av] = graph_.edges[a.edge];
    const auto [bu, bv] = graph_.edges[b.edge];

    double best = kInf;
    if (a.edge == b.edge)
        best = std::abs(ta - tb);
    const std::array<std::pair<std::size_t, double>, 2> from{{{au, ta}, {av, la - ta}}};
    const std::array<std::pair<std::size_t, double>, 2> to{{{bu, tb}, {bv, lb - tb}}};
    for (const auto& [x, ox] : from)
        for (const auto& [y, oy] : to)
            best = std::min(best, ox + vertex_distance(x, y) + oy);
    return best;
}

double MetricGraph::xi() const
{
    const double right_angle_bound = std::numbers::sqrt2;
    double best = right_angle_bound;
    std::vector<std::vector<std::size_t>> incident(vertex_count());
    for (std::size_t e = 0; e < edge_count(); ++e) {
        incident[graph_.edges[e][0]].push_back(e);
        incident[graph_.edges[e][1]].push_back(e);
    }
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        const auto& inc = incident[v];
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                const auto other = [&](std::size_t e) {
                    const auto& ed = graph_.edges[e];
                    return ed[0] == v ? ed[1] : ed[0];
                };
                const double alpha = angle_between(graph_.vertices[other(inc[i])] - graph_.vertices[v],
                                                   graph_.vertices[other(inc[j])] - graph_.vertices[v]);
                if (alpha < std::numbers::pi / 2)
                    best = std::max(best, 1.0 / std::sin(alpha / 2));
            }
        }
    }
    return best;
}

FeatureSizeEstimate MetricGraph::gfs(double step) const
{
    if (!(step > 0.0))
        throw std::invalid_argument(fmt::format("gfs: step must be positive, got {}", step));
    if (edge_count() == 0)
        throw std::domain_error("gfs: graph has no edges");

    // Slightly inclusive geodesic constraint keeps the estimate conservative.
    const double l = shortest_edge_length() - 1e-9;
    double best = kInf;

    // Closest approach of x to edge f restricted to arclengths [lo, hi].
    const auto reach = [&](const Point& x, std::size_t f, double lo, double hi) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, lengths_[f]);
        if (lo > hi)
            return;
        const Segment piece{point_at({f, lo}), point_at({f, hi})};
        best = std::min(best, point_segment_distance(x, piece));
    };

    for (std::size_t e = 0; e < edge_count(); ++e) {
        const double le = lengths_[e];
        const auto [eu, ev] = graph_.edges[e];
        const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(le / step)));
        for (std::size_t k = 0; k <= pieces; ++k) {
            const double s = le * static_cast<double>(k) / static_cast<double>(pieces);
            const Point x = point_at({e, s});
            for (std::size_t f = 0; f < edge_count(); ++f) {
                const double lf = lengths_[f];
                const auto [fu, fv] = graph_.edges[f];
                if (f == e) {
                    // d(t) = min(|s-t|, s + d(u,v) + lf - t, lf - s + d(v,u) + t)
                    const double lo = l - (lf - s + vertex_distance(ev, eu));
                    const double hi = s + vertex_distance(eu, ev) + lf - l;
                    reach(x, f, lo, std::min(hi, s - l));
                    reach(x, f, std::max(lo, s + l), hi);
                } else {
                    const double to_u = std::min(s + vertex_distance(eu, fu), le - s + vertex_distance(ev, fu));
                    const double to_v = std::min(s + vertex_distance(eu, fv), le - s + vertex_distance(ev, fv));
                    // d(t) = min(to_u + t, to_v + lf - t)
                    reach(x, f, l - to_u, to_v + lf - l);
                }
            }
        }
    }

    // Isolated vertices are at infinite geodesic distance from everything else.
    std::vector<bool> isolated(vertex_count(), true);
    for (const auto& [u, v] : graph_.edges)
        isolated[u] = isolated[v] = false;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        if (!isolated[v])
            continue;
        for (std::size_t f = 0; f < edge_count(); ++f)
            reach(graph_.vertices[v], f, 0.0, lengths_[f]);
        for (std::size_t w = v + 1; w < vertex_count(); ++w)
            if (isolated[w])
                best = std::min(best, euclidean_distance(graph_.vertices[v], graph_.vertices[w]));
    }

    return FeatureSizeEstimate{0.5 * best, 2.0 * step};
}

Point MetricGraph::point_at(const GraphPoint& gp) const
{
    check_point(gp);
    const auto [u, v] = graph_.edges[gp.edge];
    const double frac = std::clamp(gp.t / lengths_[gp.edge], 0.0, 1.0);
    return graph_.vertices[u] + frac * (graph_.vertices[v] - graph_.vertices[u]);
}

GraphBetti MetricGraph::betti() const
{
    const std::size_t n = vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t components = n;
    for (const auto& [u, v] : graph_.edges) {
        const std::size_t ru = find_root(parent, u);
        const std::size_t rv = find_root(parent, v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return GraphBetti{components, edge_count() + components - n};
}

}  // namespace mgrecon
