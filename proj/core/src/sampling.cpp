#include "mgrecon/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace mgrecon {

namespace {

// Spacing margin below 2*eps so equal spacing survives rounding.
constexpr double kSpacingFactor = 1.98;
constexpr double kJitterFraction = 0.4;

void require_positive_eps(double eps, const char* where)
{
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw std::invalid_argument(fmt::format("{}: eps must be positive and finite, got {}", where, eps));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

void Sample::check_dimension() const
{
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].dim() != points[0].dim())
            throw std::invalid_argument(
                fmt::format("sample point {} has dimension {}, expected {}", i, points[i].dim(), points[0].dim()));
    if (!provenance.empty() && provenance.size() != points.size())
        throw std::invalid_argument("sample provenance length does not match point count");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

Sample sample_cover(const MetricGraph& graph, double eps, SampleMode mode, std::uint64_t seed)
{
    require_positive_eps(eps, "sample_cover");
    Sample sample;
    if (mode == SampleMode::Jittered)
        sample.seed = seed;
    std::mt19937_64 rng(seed);

    std::vector<std::optional<Provenance>> vertex_prov(graph.vertex_count());
    for (std::size_t e = graph.edge_count(); e-- > 0;) {
        vertex_prov[graph.edge(e)[0]] = Provenance{e, 0.0};
        vertex_prov[graph.edge(e)[1]] = Provenance{e, graph.edge_length(e)};
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        sample.points.push_back(graph.vertex(v));
        sample.provenance.push_back(vertex_prov[v]);
    }

    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const double length = graph.edge_length(e);
        // Jitter of +-0.4h can stretch a gap to 1.8h, so jittered runs use a
        // proportionally finer base spacing.
        const double stretch = mode == SampleMode::Jittered ? 1.0 + 2.0 * kJitterFraction : 1.0;
        const auto intervals =
            static_cast<std::size_t>(std::max(1.0, std::ceil(stretch * length / (kSpacingFactor * eps))));
        const double spacing = length / static_cast<double>(intervals);
        std::uniform_real_distribution<double> jitter(-kJitterFraction * spacing, kJitterFraction * spacing);
        for (std::size_t j = 1; j < intervals; ++j) {
            double t = spacing * static_cast<double>(j);
            if (mode == SampleMode::Jittered)
                t += jitter(rng);
            sample.points.push_back(graph.point_at({e, t}));
            sample.provenance.push_back(Provenance{e, t});
        }
    }
    return sample;
}

CoverReport verify_cover(const Sample& sample, double eps, const MetricGraph& graph)
{
    require_positive_eps(eps, "verify_cover");
    sample.check_dimension();
    if (!sample.empty() && sample.dim() != graph.dim())
        throw std::invalid_argument(
            fmt::format("verify_cover: sample dimension {} does not match graph dimension {}", sample.dim(), graph.dim()));

    CoverReport report;
    const double rounding = 2.0 * kTolerance;
    std::vector<Interval> pieces;
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const double length = graph.edge_length(e);
        const Segment seg = graph.segment(e);
        pieces.clear();
        for (const Point& p : sample.points)
            if (auto hit = segment_ball_intersection(seg, Ball{p, eps}, 0.0))
                pieces.push_back(Interval{hit->lo * length, hit->hi * length});
        std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

        double cursor = 0.0;
        const auto gap = [&](double lo, double hi) {
            if (hi - lo > rounding) {
                report.uncovered_intervals.push_back(UncoveredInterval{e, lo, hi});
                report.max_gap = std::max(report.max_gap, hi - lo);
            }
        };
        for (const Interval& piece : pieces) {
            if (piece.lo > cursor)
                gap(cursor, piece.lo);
            cursor = std::max(cursor, piece.hi);
        }
        if (cursor < length)
            gap(cursor, length);
    }

    std::vector<bool> isolated(graph.vertex_count(), true);
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        isolated[graph.edge(e)[0]] = isolated[graph.edge(e)[1]] = false;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        if (!isolated[v])
            continue;
        const bool hit = std::any_of(sample.points.begin(), sample.points.end(), [&](const Point& p) {
            return euclidean_distance(p, graph.vertex(v)) <= eps + kTolerance;
        });
        if (!hit)
            report.uncovered_vertices.push_back(v);
    }

    report.covered = report.uncovered_intervals.empty() && report.uncovered_vertices.empty();
    return report;
}

Sample sample_uniform_random(const MetricGraph& graph, std::size_t n, std::uint64_t seed)
{
    if (n == 0)
        throw std::invalid_argument("sample_uniform_random: n must be >= 1");
    if (graph.edge_count() == 0)
        throw std::domain_error("sample_uniform_random: graph has no edges");

    std::vector<double> weights(graph.edge_count());
    for (std::size_t e = 0; e < graph.edge_count(); ++e)
        weights[e] = graph.edge_length(e);
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick_edge(weights.begin(), weights.end());
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Sample sample;
    sample.seed = seed;
    sample.points.reserve(n);
    sample.provenance.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t e = pick_edge(rng);
        const double t = unit(rng) * graph.edge_length(e);
        sample.points.push_back(graph.point_at({e, t}));
        sample.provenance.push_back(Provenance{e, t});
    }
    return sample;
}

CoverageEstimate estimate_coverage_probability(const MetricGraph& graph, double eps, std::size_t n,
                                               std::size_t trials, std::uint64_t seed)
{
    require_positive_eps(eps, "estimate_coverage_probability");
    if (trials == 0)
        throw std::invalid_argument("estimate_coverage_probability: trials must be >= 1");

    std::vector<char> covered(trials, 0);
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, trials);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < trials; i += workers) {
                    const Sample s = sample_uniform_random(graph, n, derive_seed(seed, i));
                    covered[i] = verify_cover(s, eps, graph).covered ? 1 : 0;
                }
            });
    }

    CoverageEstimate est;
    est.trials = trials;
    est.successes = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 1));
    est.probability = static_cast<double>(est.successes) / static_cast<double>(trials);
    est.half_width = 1.96 * std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
    return est;
}

}  // namespace mgrecon
