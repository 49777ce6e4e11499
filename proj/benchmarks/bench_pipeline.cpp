#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "mgrecon/complex.hpp"
#include "mgrecon/curve.hpp"
#include "mgrecon/fixtures.hpp"
#include "mgrecon/graph.hpp"
#include "mgrecon/homology.hpp"
#include "mgrecon/sampling.hpp"

using namespace mgrecon;

namespace {

struct Workload {
    MetricGraph graph;
    double eps;
    double xi;
    Sample sample;
};

// Square with a diagonal at `fraction` of its threshold.
Workload square_diagonal(double fraction)
{
    MetricGraph g(fixtures::square_with_diagonal());
    const double xi = g.xi();
    const double eps = fraction * g.gfs(1e-3 * g.shortest_edge_length()).estimate / xi;
    Sample s = sample_cover(g, eps, SampleMode::Jittered, 1);
    return {std::move(g), eps, xi, std::move(s)};
}

void BM_CechNerve(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    Sample s;
    s.points = fixtures::random_points(rng, static_cast<std::size_t>(state.range(0)), 2, 10.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(cech_nerve(s, 0.6));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CechNerve)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_NervePair(benchmark::State& state)
{
    const Workload w = square_diagonal(0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(nerve_pair(w.sample, w.eps, w.xi));
    state.counters["points"] = static_cast<double>(w.sample.size());
}
BENCHMARK(BM_NervePair);

void BM_Gfs(benchmark::State& state)
{
    const MetricGraph g(fixtures::two_squares());
    const double step = g.shortest_edge_length() / static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(g.gfs(step));
}
BENCHMARK(BM_Gfs)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Algorithm1(benchmark::State& state)
{
    const Workload w = square_diagonal(0.8);
    const NervePair nerves = nerve_pair(w.sample, w.eps, w.xi);
    const auto method = state.range(0) == 0 ? Algorithm1Method::Literal : Algorithm1Method::ImageRank;
    for (auto _ : state)
        benchmark::DoNotOptimize(algorithm1(nerves, w.eps, w.xi, method));
    state.SetLabel(to_string(method));
}
BENCHMARK(BM_Algorithm1)->Arg(0)->Arg(1);

void BM_BettiRandom(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const SimplicialComplex2 k = fixtures::random_complex(rng, static_cast<std::size_t>(state.range(0)), 0.3, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_numbers(k));
    state.counters["edges"] = static_cast<double>(k.edges().size());
}
BENCHMARK(BM_BettiRandom)->Arg(30)->Arg(60)->Arg(120);

void BM_MedialAxis(benchmark::State& state)
{
    Sample s;
    for (int k = 0; k < 64; ++k) {
        const double a = 2 * 3.141592653589793 * k / 64;
        s.points.push_back({std::cos(a), std::sin(a)});
    }
    const CurveReconstruction r = reconstruct_curve(s, 0.5, OrderMode::Given);
    for (auto _ : state)
        benchmark::DoNotOptimize(validate_medial_axis(r.polylines[0], s, 0.5, 5, 10000));
}
BENCHMARK(BM_MedialAxis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
