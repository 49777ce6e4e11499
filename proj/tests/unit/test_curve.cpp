#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mgrecon/curve.hpp"

using namespace mgrecon;
using doctest::Approx;

namespace {

Sample circle(std::size_t n, double radius = 1.0, double phase = 0.0)
{
    Sample s;
    for (std::size_t k = 0; k < n; ++k) {
        const double a = phase + 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        s.points.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return s;
}

// Dense angular check that the circle lies inside the union of eps-balls.
bool circle_covered(const Sample& s, double radius, double eps)
{
    for (int k = 0; k < 20000; ++k) {
        const double a = 2 * std::numbers::pi * k / 20000.0;
        const Point x{radius * std::cos(a), radius * std::sin(a)};
        const bool hit = std::any_of(s.points.begin(), s.points.end(),
                                     [&](const Point& p) { return euclidean_distance(p, x) <= eps + 1e-9; });
        if (!hit)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("is_simple")
{
    CHECK(is_simple({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}));
    // Bow tie.
    CHECK_FALSE(is_simple({{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}));
    // Repeated vertex.
    CHECK_FALSE(is_simple({{{0, 0}, {1, 0}, {1, 0}, {0, 1}}}));
    // Spike folding back over its own edge.
    CHECK_FALSE(is_simple({{{0, 0}, {2, 0}, {1, 0}, {0, 1}}}));
}

TEST_CASE("order_samples given and nearest-neighbour")
{
    const Sample c = circle(10);
    std::vector<std::size_t> identity(10);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(order_samples(c, OrderMode::Given) == identity);

    // Shuffle a generously sampled circle and recover the cyclic order.
    std::mt19937_64 rng(6);
    const Sample dense = circle(40, 1.0, 0.3);
    std::vector<std::size_t> perm(40);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Sample shuffled;
    for (std::size_t i : perm)
        shuffled.points.push_back(dense.points[i]);
    const auto order = order_samples(shuffled, OrderMode::NearestNeighbor);
    REQUIRE(order.size() == 40);
    int direction = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t a = perm[order[k]];
        const std::size_t b = perm[order[(k + 1) % order.size()]];
        const int step = (b + 40 - a) % 40 == 1 ? 1 : (a + 40 - b) % 40 == 1 ? -1 : 0;
        CHECK(step != 0);
        if (direction == 0)
            direction = step;
        CHECK(step == direction);
    }

    CHECK_THROWS_AS(order_samples(circle(2), OrderMode::Given), std::invalid_argument);
    Sample spatial;
    spatial.points = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(order_samples(spatial, OrderMode::Given), std::invalid_argument);
}

TEST_CASE("nearest-neighbour ordering refuses a crossing chain")
{
    // Greedy chain 0-1-2-3 is a Z; closing 3 -> 0 crosses the middle segment.
    Sample z;
    z.points = {{0, 0}, {1, 0}, {1, 1}, {2, 1}};
    CHECK_THROWS_AS(order_samples(z, OrderMode::NearestNeighbor), CurveError);

    // Two interleaved rows: the greedy walk zig-zags and has to cut back.
    Sample rows;
    rows.points = {{0, 0}, {0.9, 0}, {1.8, 0}, {0.45, 0.3}, {1.35, 0.3}, {2.6, 0.3}};
    CHECK_THROWS_AS(order_samples(rows, OrderMode::NearestNeighbor), CurveError);
}

TEST_CASE("reconstruct_curve accepts a 12-gon")
{
    const Sample s = circle(12);
    const CurveReconstruction r = reconstruct_curve(s, 0.6, OrderMode::Given);
    REQUIRE(r.polylines.size() == 1);
    CHECK(r.polylines[0].size() == 12);
    CHECK(r.report.accepted);
    CHECK(r.report.simple);
    CHECK(r.report.edges_within_2eps);
    CHECK(r.report.max_edge_length == Approx(2 * std::sin(std::numbers::pi / 12)));
    CHECK(r.report.nerve_betti == Betti{1, 1});
    CHECK(r.report.components == 1);
    // Vertices are the samples themselves.
    for (const Point& v : r.polylines[0].vertices)
        CHECK(std::find(s.points.begin(), s.points.end(), v) != s.points.end());
}

TEST_CASE("three points at eps = radius cover the circle but the nerve is filled")
{
    const Sample s = circle(3);
    CHECK(circle_covered(s, 1.0, 1.0));
    // The circumradius equals eps, so the closed balls share the centre and
    // the Cech nerve is a filled triangle, which is not a circle.
    const CurveReconstruction r = try_reconstruct_curve(s, 1.0, OrderMode::Given);
    CHECK(r.report.nerve_betti == Betti{1, 0});
    CHECK_FALSE(r.report.accepted);
    CHECK_THROWS_AS(reconstruct_curve(s, 1.0, OrderMode::Given), CurveError);

    // Just below the circumradius the centre is free and the nerve is a circle.
    const CurveReconstruction below = try_reconstruct_curve(s, 0.999, OrderMode::Given);
    CHECK_FALSE(circle_covered(s, 1.0, 0.999));
    CHECK(below.report.nerve_betti == Betti{1, 1});
}

TEST_CASE("undersampled circle is rejected")
{
    const Sample s = circle(4);
    CHECK_FALSE(circle_covered(s, 1.0, 0.5));
    const CurveReconstruction r = try_reconstruct_curve(s, 0.5, OrderMode::Given);
    CHECK_FALSE(r.report.accepted);
    // No two balls meet, so every sample is its own component.
    CHECK(r.report.components == 4);
    CHECK(r.report.nerve_betti == Betti{4, 0});
    CHECK(r.report.diagnostics.size() == 4);
    CHECK_THROWS_AS(reconstruct_curve(s, 0.5, OrderMode::Given), CurveError);
}

TEST_CASE("two separate circles give two polylines")
{
    Sample s = circle(12);
    for (const Point& p : circle(12).points)
        s.points.push_back(p + Point{5, 0});
    const CurveReconstruction r = reconstruct_curve(s, 0.4, OrderMode::NearestNeighbor);
    CHECK(r.report.components == 2);
    CHECK(r.polylines.size() == 2);
    CHECK(r.report.nerve_betti == Betti{2, 2});
}

TEST_CASE("accepted reconstructions satisfy the curve invariants")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const double radius = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(8, 60)(rng);
        const Sample s = circle(n, radius, std::uniform_real_distribution<double>(0, 1)(rng));
        const double chord = 2 * radius * std::sin(std::numbers::pi / static_cast<double>(n));
        const double eps = std::min(radius, chord * std::uniform_real_distribution<double>(0.55, 1.5)(rng));
        const CurveReconstruction r = try_reconstruct_curve(s, eps, OrderMode::NearestNeighbor);
        if (!r.report.accepted)
            continue;
        CHECK(r.report.nerve_betti == Betti{1, 1});
        CHECK(r.report.simple);
        const ClosedPolyline& poly = r.polylines.at(0);
        const double sagitta = radius - std::sqrt(radius * radius - chord * chord / 4);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Segment seg = poly.segment(i);
            for (int k = 0; k <= 10; ++k) {
                const Point x = seg.a + (k / 10.0) * (seg.b - seg.a);
                const double to_sample = std::min(euclidean_distance(x, seg.a), euclidean_distance(x, seg.b));
                CHECK(to_sample <= eps + 1e-9);
                CHECK(std::abs(norm(x) - radius) <= sagitta + 1e-9);
            }
        }
    }
}

TEST_CASE("union_boundary_points lie on the boundary")
{
    const Sample s = circle(10);
    const double eps = 0.4;
    const auto pts = union_boundary_points(s.points, eps, 2000);
    CHECK(pts.size() >= 1000);
    for (const Point& b : pts) {
        double nearest = 1e9;
        for (const Point& c : s.points)
            nearest = std::min(nearest, euclidean_distance(b, c));
        CHECK(nearest == Approx(eps).epsilon(1e-9));
    }
}

TEST_CASE("validate_medial_axis on a dense circle sample")
{
    const double eps = 0.5;
    const Sample s = circle(64);  // spacing 0.098 <= 0.2 eps
    const CurveReconstruction r = reconstruct_curve(s, eps, OrderMode::Given);
    const MedialAxisReport m = validate_medial_axis(r.polylines[0], s, eps, 5, 10000);
    CHECK(m.probes == 64 * 5);
    CHECK(m.boundary_points >= 9900);
    CHECK(m.pass_fraction >= 0.99);

    ClosedPolyline two{{{0, 0}, {1, 0}}};
    CHECK_THROWS_AS(validate_medial_axis(two, s, eps, 5), std::invalid_argument);
}
