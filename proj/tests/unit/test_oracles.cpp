#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "mgrecon/fixtures.hpp"
#include "mgrecon/homology.hpp"
#include "mgrecon/oracles.hpp"

using namespace mgrecon;

namespace {

// gfs_bruteforce at fine_step = 1e-4 * l, computed once and frozen here
// because the double loop takes tens of seconds per fixture.
const std::map<std::string, double> kFrozenGfs{
    {"triangle", 0.24999999999999997},        {"square", 0.35355339059327379},
    {"square-diagonal", 0.19135500476700787}, {"two-squares", 0.35355339059327379},
    {"h-tree", 0.35355339059327379},          {"hexagon", 0.43301270261376273},
};

}  // namespace

TEST_CASE("gfs_bruteforce examples")
{
    // Slightly under 1e-3: the triangle's edges are 1 only up to rounding.
    const double step = 0.999e-3;
    CHECK(std::abs(oracles::gfs_bruteforce(fixtures::unit_segment(), step) - 0.5) <= 2 * step);
    CHECK(std::abs(oracles::gfs_bruteforce(fixtures::unit_triangle(), step) - 0.25) <= 2 * step);
    CHECK(std::abs(oracles::gfs_bruteforce(fixtures::unit_square(), step) - std::sqrt(2.0) / 4) <= 2 * step);
    CHECK_THROWS_AS(oracles::gfs_bruteforce(fixtures::unit_square(), 0.01), std::invalid_argument);
}

TEST_CASE("frozen oracle values agree with the analytic minimisers")
{
    CHECK(std::abs(kFrozenGfs.at("triangle") - 0.25) <= 2e-4);
    CHECK(std::abs(kFrozenGfs.at("square") - std::sqrt(2.0) / 4) <= 2e-4);
    // Hexagon: midpoints of adjacent edges are sqrt(3)/2 apart.
    CHECK(std::abs(kFrozenGfs.at("hexagon") - std::sqrt(3.0) / 4) <= 2e-4);
}

TEST_CASE("library gfs matches the frozen oracle values")
{
    for (const auto& [name, desc] : fixtures::standard_suite()) {
        INFO(name);
        const MetricGraph g(desc);
        const double step = 1e-3 * g.shortest_edge_length();
        const auto est = g.gfs(step);
        CHECK(std::abs(est.estimate - kFrozenGfs.at(name)) <= est.error_bound + 2e-4);
    }
}

TEST_CASE("library gfs matches the live oracle at a coarse step")
{
    for (const char* name : {"segment", "triangle", "square", "h-tree", "star30"}) {
        INFO(name);
        const EmbeddedMetricGraph desc = fixtures::by_name(name);
        const MetricGraph g(desc);
        const double step = 1e-3 * g.shortest_edge_length();
        const double oracle = oracles::gfs_bruteforce(desc, step);
        const auto est = g.gfs(step);
        CHECK(std::abs(est.estimate - oracle) <= 2 * est.error_bound);
    }
}

TEST_CASE("betti_bruteforce examples")
{
    const SimplicialComplex2 hollow(3, {{0, 1}, {0, 2}, {1, 2}}, {});
    const SimplicialComplex2 filled(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
    CHECK(oracles::betti_bruteforce(hollow) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(oracles::betti_bruteforce(filled) == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(oracles::betti_bruteforce(SimplicialComplex2(3, {}, {})) == std::pair<std::size_t, std::size_t>{3, 0});

    std::vector<Edge> many;
    for (Index i = 0; i < 70; ++i)
        for (Index j = i + 1; j < 70; ++j)
            many.push_back({i, j});
    CHECK_THROWS_AS(oracles::betti_bruteforce(SimplicialComplex2(70, many, {})), std::invalid_argument);
}

TEST_CASE("image_rank_bruteforce examples")
{
    const SimplicialComplex2 hollow(3, {{0, 1}, {0, 2}, {1, 2}}, {});
    const SimplicialComplex2 filled(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
    CHECK(oracles::image_rank_bruteforce(hollow, hollow) == 1);
    CHECK(oracles::image_rank_bruteforce(hollow, filled) == 0);

    std::vector<Edge> many;
    for (Index i = 0; i < 8; ++i)
        for (Index j = i + 1; j < 8; ++j)
            many.push_back({i, j});
    const SimplicialComplex2 big(8, many, {});
    CHECK_THROWS_AS(oracles::image_rank_bruteforce(big, big), std::invalid_argument);
}
