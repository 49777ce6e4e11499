#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mgrecon/geometry.hpp"

using namespace mgrecon;
using doctest::Approx;

TEST_CASE("euclidean_distance examples")
{
    CHECK(euclidean_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(euclidean_distance({0, 0}, {3, 4}) == Approx(5.0));
    CHECK(euclidean_distance({1, 1}, {2, 2}) == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(euclidean_distance({0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("distance axioms on random triples")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 2 + trial % 3;
        Point p(d), q(d), r(d);
        for (std::size_t c = 0; c < d; ++c) {
            p[c] = u(rng);
            q[c] = u(rng);
            r[c] = u(rng);
        }
        CHECK(euclidean_distance(p, p) == 0.0);
        CHECK(std::abs(euclidean_distance(p, q) - euclidean_distance(q, p)) <= 1e-12);
        CHECK(euclidean_distance(p, r) <= euclidean_distance(p, q) + euclidean_distance(q, r) + 1e-12);
    }
}

TEST_CASE("min_enclosing_ball_3 examples")
{
    const double s = 2.0;
    const Ball eq = min_enclosing_ball_3({0, 0}, {s, 0}, {s / 2, s * std::sqrt(3.0) / 2});
    CHECK(eq.radius == Approx(s / std::sqrt(3.0)).epsilon(1e-12));

    const Ball col = min_enclosing_ball_3({0, 0}, {1, 0}, {2, 0});
    CHECK(col.radius == Approx(1.0));
    CHECK(col.center[0] == Approx(1.0));
    CHECK(col.center[1] == Approx(0.0));

    const Ball same = min_enclosing_ball_3({3, 4}, {3, 4}, {3, 4});
    CHECK(same.radius == 0.0);

    // Obtuse: the longest side is a diameter.
    const Ball obtuse = min_enclosing_ball_3({0, 0}, {4, 0}, {2, 0.5});
    CHECK(obtuse.radius == Approx(2.0));

    // Works off the plane as well.
    const Ball in3d = min_enclosing_ball_3({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
    CHECK(in3d.radius == Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("min_enclosing_ball_3 is minimal: containment and grid spot check")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        const Ball b = min_enclosing_ball_3(p, q, r);
        for (const Point* x : {&p, &q, &r})
            CHECK(euclidean_distance(b.center, *x) <= b.radius + 1e-9);

        const double shrunk = b.radius - 1e-6;
        bool any = false;
        const int steps = 150;
        for (int i = 0; i <= steps && !any; ++i)
            for (int j = 0; j <= steps && !any; ++j) {
                const Point c{-0.5 + 2.0 * i / steps, -0.5 + 2.0 * j / steps};
                any = euclidean_distance(c, p) <= shrunk && euclidean_distance(c, q) <= shrunk &&
                      euclidean_distance(c, r) <= shrunk;
            }
        CHECK_FALSE(any);
    }
}

TEST_CASE("segment_ball_intersection examples")
{
    const Segment s{{0, 0}, {2, 0}};
    const auto mid = segment_ball_intersection(s, Ball{{1, 0}, 0.5});
    REQUIRE(mid);
    CHECK(mid->lo == Approx(0.25).epsilon(1e-8));
    CHECK(mid->hi == Approx(0.75).epsilon(1e-8));

    CHECK_FALSE(segment_ball_intersection(s, Ball{{1, 5}, 1.0}));

    const auto all = segment_ball_intersection(s, Ball{{1, 0}, 3.0});
    REQUIRE(all);
    CHECK(all->lo == 0.0);
    CHECK(all->hi == 1.0);

    // Tangent ball touches in a single parameter under the closed convention.
    const auto touch = segment_ball_intersection(s, Ball{{1, 1}, 1.0}, 0.0);
    REQUIRE(touch);
    CHECK(touch->lo == Approx(0.5));
    CHECK(touch->width() == Approx(0.0));
}

TEST_CASE("segment_ball_intersection agrees with dense membership sampling")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 2);
    std::uniform_real_distribution<double> rad(0.05, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Segment s{{u(rng), u(rng)}, {u(rng), u(rng)}};
        const Ball b{{u(rng), u(rng)}, rad(rng)};
        const auto hit = segment_ball_intersection(s, b, 0.0);
        const double h = 1.0 / 999.0;
        for (int k = 0; k < 1000; ++k) {
            const double t = k * h;
            const Point x = s.a + t * (s.b - s.a);
            const double d = euclidean_distance(x, b.center);
            // Skip parameters within rounding of the ball boundary.
            if (std::abs(d - b.radius) < 1e-9)
                continue;
            const bool inside = d < b.radius;
            const bool claimed = hit && t >= hit->lo - 1e-12 && t <= hit->hi + 1e-12;
            CHECK(inside == claimed);
        }
    }
}

TEST_CASE("segments_intersect examples")
{
    CHECK(segments_intersect({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}) == SegmentRelation::Intersecting);
    CHECK(segments_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}) == SegmentRelation::Disjoint);
    CHECK(segments_intersect({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}) == SegmentRelation::SharedEndpoint);
    // Folding back along the same ray is more than adjacency.
    CHECK(segments_intersect({{0, 0}, {2, 0}}, {{2, 0}, {1, 0}}) == SegmentRelation::Intersecting);
    // T-junction: endpoint touching an interior point.
    CHECK(segments_intersect({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}) == SegmentRelation::Intersecting);
    // Collinear but separated.
    CHECK(segments_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}) == SegmentRelation::Disjoint);
    CHECK_THROWS_AS(segments_intersect({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("segment_distance in 3-d")
{
    CHECK(segment_distance({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 1}, {1, 1, 1}}) == Approx(std::sqrt(2.0)));
    CHECK(segment_distance({{0, 0, 0}, {1, 0, 0}}, {{0.5, -1, 0}, {0.5, 1, 0}}) == Approx(0.0));
    // Skew lines, closest points interior to both.
    CHECK(segment_distance({{-1, 0, 0}, {1, 0, 0}}, {{0, -1, 2}, {0, 1, 2}}) == Approx(2.0));
}

TEST_CASE("angle_between examples")
{
    CHECK(angle_between({1, 0}, {0, 1}) == Approx(std::numbers::pi / 2));
    CHECK(angle_between({1, 0}, {1, 0}) == Approx(0.0));
    CHECK(angle_between({1, 0}, {1, std::sqrt(3.0)}) == Approx(std::numbers::pi / 3));
    CHECK(angle_between({1, 0}, {-1, 0}) == Approx(std::numbers::pi));
    CHECK_THROWS_AS(angle_between({0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("point_in_polygon")
{
    const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(point_in_polygon({0.5, 0.5}, square));
    CHECK_FALSE(point_in_polygon({1.5, 0.5}, square));
}
