#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "mgrecon/complex.hpp"
#include "mgrecon/fixtures.hpp"
#include "mgrecon/homology.hpp"

using namespace mgrecon;
using doctest::Approx;

namespace {

Sample sample_of(std::vector<Point> points)
{
    Sample s;
    s.points = std::move(points);
    return s;
}

Sample equilateral(double side)
{
    return sample_of({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
}

bool subset(const SimplicialComplex2& a, const SimplicialComplex2& b) { return a.is_subcomplex_of(b); }

}  // namespace

TEST_CASE("SimplicialComplex2 construction")
{
    const SimplicialComplex2 k(3, {{1, 2}, {0, 1}, {0, 2}, {0, 1}}, {{0, 1, 2}});
    CHECK(k.edges().size() == 3);
    CHECK(k.edges().front() == Edge{0, 1});
    CHECK(k.check().empty());
    CHECK(k.edge_index(1, 2) == std::optional<std::size_t>(2));
    CHECK(k.edge_index(2, 1) == std::optional<std::size_t>(2));
    CHECK_FALSE(k.edge_index(0, 0));

    CHECK_THROWS_AS(SimplicialComplex2(3, {{0, 1}, {1, 2}}, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex2(2, {{0, 5}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex2(2, {{1, 1}}, {}), std::invalid_argument);
}

TEST_CASE("cech_nerve examples")
{
    const Sample pair = sample_of({{0, 0}, {1, 0}});
    CHECK(cech_nerve(pair, 0.5).edges().size() == 1);
    CHECK(cech_nerve(pair, 0.5 - 1e-6).edges().empty());

    const double s = 1.0;
    const SimplicialComplex2 filled = cech_nerve(equilateral(s), s / std::sqrt(3.0));
    CHECK(filled.triangles().size() == 1);
    CHECK(betti_numbers(filled) == Betti{1, 0});

    const SimplicialComplex2 hollow = cech_nerve(equilateral(s), 0.51 * s);
    CHECK(hollow.edges().size() == 3);
    CHECK(hollow.triangles().empty());
    CHECK(betti_numbers(hollow) == Betti{1, 1});

    CHECK_THROWS_AS(cech_nerve(Sample{}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(cech_nerve(pair, 0.0), std::invalid_argument);
}

TEST_CASE("cech_nerve matches a quadratic reference on random points")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Sample s = sample_of(fixtures::random_points(rng, 25, 2 + trial % 2, 2.0));
        const double eps = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
        const SimplicialComplex2 k = cech_nerve(s, eps);
        std::size_t edges = 0;
        std::size_t triangles = 0;
        for (Index i = 0; i < s.size(); ++i)
            for (Index j = i + 1; j < s.size(); ++j) {
                const bool e = euclidean_distance(s.points[i], s.points[j]) <= 2 * eps + kTolerance;
                edges += e;
                CHECK(k.contains_edge(i, j) == e);
                for (Index l = j + 1; l < s.size(); ++l) {
                    const bool t = min_enclosing_ball_3(s.points[i], s.points[j], s.points[l]).radius <= eps + kTolerance;
                    triangles += t;
                    CHECK(k.contains_triangle({i, j, l}) == t);
                }
            }
        CHECK(k.edges().size() == edges);
        CHECK(k.triangles().size() == triangles);
    }
}

TEST_CASE("nerve_pair")
{
    const MetricGraph tri(fixtures::unit_triangle());
    const Sample s = sample_cover(tri, 0.1, SampleMode::Uniform);
    const NervePair same = nerve_pair(s, 0.1, 1.0);
    CHECK(same.k1 == same.k2);

    const NervePair p = nerve_pair(s, 0.1, 2.0);
    CHECK(subset(p.k1, p.k2));
    CHECK(p.k2.triangles().size() > p.k1.triangles().size());
    // Near each corner K2 fills the little cycles that K1 leaves open.
    CHECK(betti_numbers(p.k2).b1 <= betti_numbers(p.k1).b1);

    CHECK_THROWS_AS(nerve_pair(s, 0.1, 0.5), std::invalid_argument);
}

TEST_CASE("nerve properties on random samples: closure, monotonicity, sandwich")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const Sample s = sample_of(fixtures::random_points(rng, 30, 2, 3.0));
        std::uniform_real_distribution<double> scale(0.05, 0.6);
        double e1 = scale(rng);
        double e2 = scale(rng);
        if (e1 > e2)
            std::swap(e1, e2);
        const SimplicialComplex2 a = cech_nerve(s, e1);
        const SimplicialComplex2 b = cech_nerve(s, e2);
        CHECK(a.check().empty());
        CHECK(b.check().empty());
        CHECK(subset(a, b));

        const SimplicialComplex2 vr = vietoris_rips(MetricMatrix::euclidean(s.points), 2 * e1);
        CHECK(vr.check().empty());
        CHECK(vr.edges() == a.edges());
        CHECK(subset(a, vr));
    }
}

TEST_CASE("transverse K1 edges join geodesically close points")
{
    for (const auto& [name, desc] : fixtures::standard_suite()) {
        INFO(name);
        const MetricGraph g(desc);
        const double l = g.shortest_edge_length();
        const double gfs = g.gfs(1e-3 * l).estimate;
        const double eps = 0.9 * (gfs - 2e-3 * l) / g.xi();
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const Sample s = sample_cover(g, eps, SampleMode::Jittered, seed);
            const SimplicialComplex2 k1 = cech_nerve(s, eps);
            for (const auto& [i, j] : k1.edges()) {
                const auto pi = s.provenance_of(i);
                const auto pj = s.provenance_of(j);
                if (pi->edge == pj->edge)
                    continue;
                CHECK(euclidean_distance(s.points[i], s.points[j]) <= 2 * eps + kTolerance);
                CHECK(g.geodesic_distance({pi->edge, pi->t}, {pj->edge, pj->t}) < l);
            }
        }
    }
}

TEST_CASE("skeleton_geodesic_metric")
{
    const double h = 0.3;
    const Sample line = sample_of({{0, 0}, {h, 0}, {2 * h, 0}});
    const SimplicialComplex2 path(3, {{0, 1}, {1, 2}}, {});
    const MetricMatrix d = skeleton_geodesic_metric(path, line);
    CHECK(d(0, 2) == Approx(2 * h));
    CHECK(d(2, 0) == Approx(2 * h));
    CHECK(d(1, 1) == 0.0);

    const SimplicialComplex2 split(3, {{0, 1}}, {});
    CHECK(skeleton_geodesic_metric(split, line)(0, 2) == std::numeric_limits<double>::infinity());

    const Sample square = sample_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const SimplicialComplex2 cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {});
    CHECK(skeleton_geodesic_metric(cycle, square)(0, 2) == Approx(2.0));
    const SimplicialComplex2 chord(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}, {});
    CHECK(skeleton_geodesic_metric(chord, square)(0, 2) == Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(skeleton_geodesic_metric(cycle, line), std::invalid_argument);
}

TEST_CASE("skeleton metric satisfies the triangle inequality")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Sample s = sample_of(fixtures::random_points(rng, 25, 2, 2.0));
        const MetricMatrix d = skeleton_geodesic_metric(cech_nerve(s, 0.3), s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(d(i, i) == 0.0);
            for (std::size_t j = 0; j < s.size(); ++j) {
                CHECK(d(i, j) == d(j, i));
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (std::isfinite(d(i, k)) && std::isfinite(d(k, j)))
                        CHECK(d(i, j) <= d(i, k) + d(k, j) + 1e-9);
            }
        }
    }
}

TEST_CASE("vietoris_rips examples")
{
    const Sample s = sample_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const MetricMatrix m = MetricMatrix::euclidean(s.points);
    const SimplicialComplex2 bare = vietoris_rips(m, 0.5);
    CHECK(bare.edges().empty());
    CHECK(bare.vertex_count() == 4);

    const SimplicialComplex2 full = vietoris_rips(m, 2.0);
    CHECK(full.edges().size() == 6);
    CHECK(full.triangles().size() == 4);
    CHECK(betti_numbers(full) == Betti{1, 0});

    CHECK_THROWS_AS(vietoris_rips(m, 0.0), std::invalid_argument);
}

TEST_CASE("conjecture_test")
{
    const MetricGraph seg(fixtures::unit_segment());
    const ConjectureReport r = conjecture_test(seg, 0.05, 1);
    CHECK(r.b0_vr == 1);
    CHECK(r.b1_vr == 0);
    CHECK(r.holds);
    CHECK(r.vr_scale == Approx(2 * (1 + std::sqrt(2.0)) * 0.05));
    CHECK(r.eps_limit == Approx((r.gfs - 2e-3) / (2 * (2 + r.xi))));

    CHECK_THROWS_AS(conjecture_test(seg, 0.2, 1), ThresholdError);

    // Outcomes on cycles and trees are recorded, not assumed.
    for (const char* name : {"triangle", "h-tree"}) {
        const MetricGraph g(fixtures::by_name(name));
        const auto gfs = g.gfs(1e-3 * g.shortest_edge_length());
        const double limit = (gfs.estimate - gfs.error_bound) / (2 * (2 + g.xi()));
        const ConjectureReport rep = conjecture_test(g, 0.8 * limit, 3);
        CHECK(rep.eps_limit == Approx(limit));
        CHECK(rep.b0_graph == g.betti().b0);
        CHECK(rep.b1_graph == g.betti().b1);
        CHECK(rep.holds == (rep.b0_vr == rep.b0_graph && rep.b1_vr == rep.b1_graph));
        MESSAGE(name << ": VR Betti (" << rep.b0_vr << ", " << rep.b1_vr << "), graph (" << rep.b0_graph << ", "
                     << rep.b1_graph << ")");
    }
}
