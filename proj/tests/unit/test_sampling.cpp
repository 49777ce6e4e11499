#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mgrecon/fixtures.hpp"
#include "mgrecon/sampling.hpp"

using namespace mgrecon;
using doctest::Approx;

namespace {

void check_provenance(const Sample& s, const MetricGraph& g)
{
    REQUIRE(s.provenance.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto prov = s.provenance_of(i);
        REQUIRE(prov);
        CHECK(euclidean_distance(g.point_at({prov->edge, prov->t}), s.points[i]) <= 1e-9);
    }
}

}  // namespace

TEST_CASE("sample_cover on a unit segment")
{
    const MetricGraph seg(fixtures::unit_segment());

    // ceil(1 / 0.99) + 1 = 3 points at eps = 0.5.
    const Sample half = sample_cover(seg, 0.5, SampleMode::Uniform);
    CHECK(half.size() == 3);
    CHECK(verify_cover(half, 0.5, seg).covered);

    // The two endpoints alone already cover under closed balls.
    Sample ends;
    ends.points = {{0, 0}, {1, 0}};
    CHECK(verify_cover(ends, 0.5, seg).covered);

    const Sample s = sample_cover(seg, 0.3, SampleMode::Uniform);
    CHECK(s.size() == 3);
    CHECK(euclidean_distance(s.points[0], s.points[2]) <= 0.594 + 1e-12);
    CHECK(verify_cover(s, 0.3, seg).covered);
    check_provenance(s, seg);

    CHECK_THROWS_AS(sample_cover(seg, 0.0, SampleMode::Uniform), std::invalid_argument);
    CHECK_THROWS_AS(sample_cover(seg, -1.0, SampleMode::Uniform), std::invalid_argument);
}

TEST_CASE("sample_cover on the unit triangle deduplicates vertices")
{
    const MetricGraph tri(fixtures::unit_triangle());
    const Sample s = sample_cover(tri, 0.1, SampleMode::Uniform);
    // 7 points per edge, three shared corners.
    CHECK(s.size() == 3 * 7 - 3);
    CHECK(verify_cover(s, 0.1, tri).covered);
    check_provenance(s, tri);
}

TEST_CASE("sample_cover always passes verify_cover")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        const MetricGraph g(fixtures::random_planar_graph(rng));
        const double eps = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
        const std::uint64_t seed = rng();
        for (const SampleMode mode : {SampleMode::Uniform, SampleMode::Jittered}) {
            const Sample s = sample_cover(g, eps, mode, seed);
            const CoverReport report = verify_cover(s, eps, g);
            CHECK(report.covered);
            CHECK(report.uncovered_intervals.empty());
            check_provenance(s, g);
        }
    }
}

TEST_CASE("jittered sampling is reproducible from its seed")
{
    const MetricGraph g(fixtures::two_squares());
    const Sample a = sample_cover(g, 0.07, SampleMode::Jittered, 5);
    const Sample b = sample_cover(g, 0.07, SampleMode::Jittered, 5);
    const Sample c = sample_cover(g, 0.07, SampleMode::Jittered, 6);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
    CHECK(a.seed == std::optional<std::uint64_t>(5));
}

TEST_CASE("verify_cover reports gaps")
{
    const MetricGraph tri(fixtures::unit_triangle());
    const Sample empty;
    const CoverReport none = verify_cover(empty, 0.1, tri);
    CHECK_FALSE(none.covered);
    CHECK(none.uncovered_intervals.size() == 3);
    CHECK(none.max_gap == Approx(1.0));

    // Points at 0 and 1 with eps just short of half the spacing leave a
    // 1e-6 hole in the middle; putting the midpoint back closes it.
    const MetricGraph seg(fixtures::unit_segment());
    const double eps = 0.5 - 0.5e-6;
    Sample s;
    s.points = {{0, 0}, {1, 0}};
    const CoverReport gap = verify_cover(s, eps, seg);
    CHECK_FALSE(gap.covered);
    REQUIRE(gap.uncovered_intervals.size() == 1);
    CHECK(gap.max_gap >= 1e-6 - 1e-12);
    CHECK(gap.uncovered_intervals[0].lo == Approx(eps));
    s.points.push_back({0.5, 0});
    CHECK(verify_cover(s, eps, seg).covered);
}

TEST_CASE("verify_cover detects every artificial gap of width >= 1e-7")
{
    std::mt19937_64 rng(41);
    const double eps = 0.02;
    int checked = 0;
    while (checked < 30) {
        const MetricGraph g(fixtures::random_planar_graph(rng));
        const double length = g.edge_length(0);
        const double mid = length / 2;
        const Point centre = g.point_at({0, mid});
        bool crowded = false;
        for (std::size_t e = 1; e < g.edge_count(); ++e)
            crowded = crowded || point_segment_distance(centre, g.segment(e)) < 0.1;
        if (crowded)
            continue;
        ++checked;

        const double width = std::uniform_real_distribution<double>(1e-7, 1e-3)(rng);
        const Sample base = sample_cover(g, eps, SampleMode::Uniform);
        Sample holed;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (i < g.vertex_count() || base.provenance_of(i)->edge != 0)
                holed.points.push_back(base.points[i]);
        // Balls on edge 0 that stop exactly at mid -+ width/2.
        for (double u = mid - width / 2 - eps; u > 0.0; u -= 1.9 * eps)
            holed.points.push_back(g.point_at({0, u}));
        for (double u = mid + width / 2 + eps; u < length; u += 1.9 * eps)
            holed.points.push_back(g.point_at({0, u}));

        const CoverReport report = verify_cover(holed, eps, g);
        CHECK_FALSE(report.covered);
        REQUIRE(report.uncovered_intervals.size() == 1);
        CHECK(report.uncovered_intervals[0].edge == 0);
        CHECK(report.max_gap == Approx(width).epsilon(1e-6));

        holed.points.push_back(centre);
        CHECK(verify_cover(holed, eps, g).covered);
    }
}

TEST_CASE("sample_uniform_random")
{
    const MetricGraph seg(fixtures::unit_segment());
    const Sample one = sample_uniform_random(seg, 1, 3);
    REQUIRE(one.size() == 1);
    CHECK(one.points[0][1] == 0.0);
    CHECK(one.points[0][0] >= 0.0);
    CHECK(one.points[0][0] <= 1.0);
    CHECK_THROWS_AS(sample_uniform_random(seg, 0, 3), std::invalid_argument);

    CHECK(sample_uniform_random(seg, 50, 9).points == sample_uniform_random(seg, 50, 9).points);

    // Edges of length 1 and 3: selection is proportional to length.
    const MetricGraph two(EmbeddedMetricGraph{2, {{0, 0}, {1, 0}, {1, 3}}, {{0, 1}, {1, 2}}});
    const std::size_t n = 10000;
    const Sample s = sample_uniform_random(two, n, 123);
    std::size_t first = 0;
    for (std::size_t i = 0; i < n; ++i)
        first += s.provenance_of(i)->edge == 0 ? 1 : 0;
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    CHECK(std::abs(static_cast<double>(first) - 0.25 * n) <= 3 * sigma);
    check_provenance(s, two);
}

TEST_CASE("estimate_coverage_probability")
{
    const MetricGraph tri(fixtures::unit_triangle());
    const double eps = 0.1;

    const auto huge = estimate_coverage_probability(tri, eps, static_cast<std::size_t>(200 * 3 / eps), 20, 1);
    CHECK(huge.probability == Approx(1.0));
    CHECK(huge.trials == 20);

    const auto single = estimate_coverage_probability(tri, eps, 1, 50, 1);
    CHECK(single.probability == 0.0);
    CHECK(single.half_width == 0.0);

    // Deterministic regardless of thread scheduling.
    const auto a = estimate_coverage_probability(tri, eps, 60, 40, 7);
    const auto b = estimate_coverage_probability(tri, eps, 60, 40, 7);
    CHECK(a.successes == b.successes);

    const auto small = estimate_coverage_probability(tri, eps, 40, 200, 11);
    const auto large = estimate_coverage_probability(tri, eps, 120, 200, 11);
    CHECK(large.probability >= small.probability - 2 * (small.half_width + large.half_width));

    CHECK_THROWS_AS(estimate_coverage_probability(tri, eps, 10, 0, 1), std::invalid_argument);
}

TEST_CASE("Sample::check_dimension")
{
    Sample s;
    s.points = {{0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(s.check_dimension(), std::invalid_argument);
}
