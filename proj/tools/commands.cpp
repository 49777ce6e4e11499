#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "json.hpp"
#include "mgrecon/complex.hpp"
#include "mgrecon/curve.hpp"
#include "mgrecon/fixtures.hpp"
#include "mgrecon/graph.hpp"
#include "mgrecon/homology.hpp"
#include "mgrecon/io.hpp"
#include "mgrecon/oracles.hpp"
#include "mgrecon/sampling.hpp"
#include "svg.hpp"

namespace mgrecon::tools {

namespace {

using json = nlohmann::ordered_json;

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CommandError(kExitUsage, fmt::format("cannot open {} for writing", path));
    out << text;
    if (!out)
        throw CommandError(kExitFailure, fmt::format("write to {} failed", path));
    spdlog::info("wrote {}", path);
}

void emit(const RunConfig& cfg, const json& doc) { write_text(cfg.out, doc.dump(2) + "\n"); }

double require_eps(const RunConfig& cfg)
{
    if (!cfg.eps)
        throw CommandError(kExitUsage, fmt::format("{}: --eps is required", cfg.subcommand));
    if (!(*cfg.eps > 0.0))
        throw CommandError(kExitUsage, fmt::format("{}: --eps must be positive, got {}", cfg.subcommand, *cfg.eps));
    return *cfg.eps;
}

MetricGraph load_graph(const std::string& path)
{
    if (path.empty())
        throw CommandError(kExitUsage, "a graph file is required");
    return MetricGraph(io::read_graph_file(path));
}

Sample load_points(const std::string& path)
{
    if (path.empty())
        throw CommandError(kExitUsage, "a points file is required");
    Sample s = io::read_points_file(path);
    if (s.empty())
        throw CommandError(kExitUsage, fmt::format("{}: no points", path));
    return s;
}

double feature_step(const RunConfig& cfg, const MetricGraph& g)
{
    if (cfg.step && !(*cfg.step > 0.0))
        throw CommandError(kExitUsage, fmt::format("--step must be positive, got {}", *cfg.step));
    return cfg.step.value_or(1e-3 * g.shortest_edge_length());
}

SampleMode sample_mode(const std::string& name)
{
    if (name.empty() || name == "uniform")
        return SampleMode::Uniform;
    if (name == "jittered")
        return SampleMode::Jittered;
    throw CommandError(kExitUsage, fmt::format("unknown sampling mode '{}' (uniform|jittered)", name));
}

Algorithm1Method algorithm_method(const std::string& name)
{
    if (name == "literal")
        return Algorithm1Method::Literal;
    if (name == "image-rank")
        return Algorithm1Method::ImageRank;
    throw CommandError(kExitUsage, fmt::format("unknown method '{}' (literal|image-rank)", name));
}

SvgScene complex_scene(const SimplicialComplex2& k, const Sample& s)
{
    SvgScene scene;
    scene.points = s.points;
    for (const auto& [i, j] : k.edges())
        scene.lines.push_back({i, j});
    for (const auto& [i, j, l] : k.triangles())
        scene.fills.push_back({i, j, l});
    return scene;
}

SvgScene polyline_scene(const std::vector<ClosedPolyline>& polylines)
{
    SvgScene scene;
    for (const ClosedPolyline& p : polylines) {
        const std::size_t base = scene.points.size();
        for (std::size_t i = 0; i < p.size(); ++i) {
            scene.points.push_back(p.vertices[i]);
            scene.lines.push_back({base + i, base + (i + 1) % p.size()});
        }
    }
    return scene;
}

void maybe_svg(const RunConfig& cfg, const SvgScene& scene)
{
    if (!cfg.svg.empty())
        write_text(cfg.svg, render_svg(scene));
}

json cover_json(const CoverReport& report)
{
    json gaps = json::array();
    for (const auto& g : report.uncovered_intervals)
        gaps.push_back({{"edge", g.edge}, {"lo", g.lo}, {"hi", g.hi}});
    return {{"covered", report.covered},
            {"max_gap", report.max_gap},
            {"uncovered_intervals", gaps},
            {"uncovered_vertices", report.uncovered_vertices}};
}

json algorithm1_json(const Algorithm1Result& r)
{
    return {{"b1_estimate", r.b1_estimate},
            {"b1_K1", r.b1_k1},
            {"b1_K2", r.b1_k2},
            {"collapsed", r.collapsed},
            {"method", to_string(r.method)},
            {"eps", r.eps},
            {"xi", r.xi},
            {"K1", {{"edges", r.k1_edges}, {"triangles", r.k1_triangles}}},
            {"K2", {{"edges", r.k2_edges}, {"triangles", r.k2_triangles}}}};
}

// Runs jobs 0..count-1 on a small pool; results land in per-job slots so the
// outcome does not depend on scheduling.
template <typename F>
void parallel_for(std::size_t count, F&& body)
{
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                body(i);
        });
}

}  // namespace

int cmd_features(const RunConfig& cfg)
{
    const MetricGraph g = load_graph(cfg.graph_path);
    const double step = feature_step(cfg, g);
    const FeatureSizeEstimate gfs = g.gfs(step);
    const double xi = g.xi();
    emit(cfg, {{"l", g.shortest_edge_length()},
               {"xi", xi},
               {"gfs_estimate", gfs.estimate},
               {"gfs_error_bound", gfs.error_bound},
               {"eps_threshold", gfs.estimate / xi},
               {"step", step}});
    return kExitOk;
}

int cmd_sample(const RunConfig& cfg)
{
    const MetricGraph g = load_graph(cfg.graph_path);
    Sample s;
    if (cfg.mode == "random") {
        if (cfg.n == 0)
            throw CommandError(kExitUsage, "sample: --mode random needs --n >= 1");
        s = sample_uniform_random(g, cfg.n, cfg.seed);
    } else {
        s = sample_cover(g, require_eps(cfg), sample_mode(cfg.mode), cfg.seed);
    }
    spdlog::info("sampled {} points", s.size());
    std::ostringstream text;
    io::write_points(text, s);
    write_text(cfg.out, text.str());
    return kExitOk;
}

int cmd_cover_check(const RunConfig& cfg)
{
    const MetricGraph g = load_graph(cfg.graph_path);
    const Sample s = io::read_points_file(cfg.points_path);
    const double eps = require_eps(cfg);
    const CoverReport report = verify_cover(s, eps, g);
    json doc = cover_json(report);
    doc["eps"] = eps;
    doc["sample_size"] = s.size();
    emit(cfg, doc);
    return report.covered ? kExitOk : kExitNotCovered;
}

int cmd_nerve(const RunConfig& cfg)
{
    const Sample s = load_points(cfg.points_path);
    const SimplicialComplex2 k = cech_nerve(s, require_eps(cfg));
    std::ostringstream text;
    io::write_complex(text, k);
    write_text(cfg.out, text.str());
    maybe_svg(cfg, complex_scene(k, s));
    return kExitOk;
}

int cmd_betti(const RunConfig& cfg)
{
    SimplicialComplex2 k;
    if (!cfg.complex_path.empty())
        k = io::read_complex_file(cfg.complex_path);
    else if (!cfg.points_path.empty())
        k = cech_nerve(load_points(cfg.points_path), require_eps(cfg));
    else
        throw CommandError(kExitUsage, "betti: give --complex, or --points with --eps");
    const Betti b = betti_numbers(k);
    emit(cfg, {{"b0", b.b0},
               {"b1", b.b1},
               {"vertices", k.vertex_count()},
               {"edges", k.edges().size()},
               {"triangles", k.triangles().size()}});
    return kExitOk;
}

int cmd_reconstruct_graph(const RunConfig& cfg)
{
    const Algorithm1Method method = algorithm_method(cfg.method);
    const double eps = require_eps(cfg);
    std::optional<MetricGraph> truth;
    if (!cfg.graph_path.empty())
        truth.emplace(load_graph(cfg.graph_path));
    else if (cfg.points_path.empty())
        throw CommandError(kExitUsage, "reconstruct-graph: give --graph or --points");
    else if (!cfg.xi)
        throw CommandError(kExitUsage, "reconstruct-graph: raw points need --xi (it is never estimated from samples)");

    Sample s;
    if (!cfg.points_path.empty())
        s = load_points(cfg.points_path);
    else
        s = sample_cover(*truth, eps, sample_mode(cfg.mode), cfg.seed);

    const double xi = cfg.xi.value_or(truth ? truth->xi() : 0.0);
    if (xi < 1.0)
        throw CommandError(kExitUsage, fmt::format("reconstruct-graph: --xi must be >= 1, got {}", xi));

    std::optional<double> threshold;
    if (truth) {
        const CoverReport cover = verify_cover(s, eps, *truth);
        if (!cover.covered) {
            emit(cfg, {{"error", "sample does not cover the graph"}, {"cover", cover_json(cover)}});
            throw CommandError(kExitNotCovered,
                               fmt::format("sample does not cover the graph at eps = {} (max gap {})", eps, cover.max_gap));
        }
        threshold = truth->gfs(feature_step(cfg, *truth)).estimate / xi;
    }

    const Algorithm1Result r = algorithm1(s, eps, xi, method, threshold);
    for (const auto& w : r.warnings)
        spdlog::warn("{}", w);
    json doc = algorithm1_json(r);
    doc["sample_size"] = s.size();
    if (truth) {
        const std::size_t b1 = truth->betti().b1;
        doc["b1_true"] = b1;
        doc["match"] = b1 == r.b1_estimate;
        doc["eps_threshold"] = *threshold;
    }
    doc["warnings"] = r.warnings;
    emit(cfg, doc);
    if (!cfg.svg.empty())
        maybe_svg(cfg, complex_scene(cech_nerve(s, eps), s));
    return kExitOk;
}

int cmd_reconstruct_curve(const RunConfig& cfg)
{
    const double eps = require_eps(cfg);
    const Sample s = load_points(cfg.points_path);
    if (s.size() < 3)
        throw CommandError(kExitUsage, fmt::format("reconstruct-curve: need at least 3 points, got {}", s.size()));
    OrderMode mode = OrderMode::Given;
    if (cfg.mode == "nearest-neighbor" || cfg.mode == "nn")
        mode = OrderMode::NearestNeighbor;
    else if (!cfg.mode.empty() && cfg.mode != "given")
        throw CommandError(kExitUsage, fmt::format("unknown order mode '{}' (given|nearest-neighbor)", cfg.mode));

    const CurveReconstruction rec = try_reconstruct_curve(s, eps, mode);
    const CurveReport& r = rec.report;
    json doc{{"accepted", r.accepted},
             {"simple", r.simple},
             {"edges_within_2eps", r.edges_within_2eps},
             {"max_edge_length", r.max_edge_length},
             {"nerve_betti", {r.nerve_betti.b0, r.nerve_betti.b1}},
             {"components", r.components},
             {"eps", eps},
             {"diagnostics", r.diagnostics}};
    if (r.accepted) {
        json medial = json::array();
        for (const ClosedPolyline& p : rec.polylines) {
            const MedialAxisReport m = validate_medial_axis(p, s, eps, cfg.probes, cfg.boundary);
            medial.push_back({{"probes", m.probes},
                              {"passed", m.passed},
                              {"pass_fraction", m.pass_fraction},
                              {"max_asymmetry", m.max_asymmetry},
                              {"boundary_points", m.boundary_points}});
        }
        doc["medial_axis"] = medial;
        if (!cfg.polyline_path.empty()) {
            std::ostringstream text;
            for (const ClosedPolyline& p : rec.polylines)
                io::write_polyline(text, p);
            write_text(cfg.polyline_path, text.str());
        }
    }
    emit(cfg, doc);
    maybe_svg(cfg, polyline_scene(rec.polylines));
    if (!r.accepted) {
        for (const auto& d : r.diagnostics)
            spdlog::error("{}", d);
        return kExitCurveRejected;
    }
    return kExitOk;
}

int cmd_conjecture_test(const RunConfig& cfg)
{
    std::vector<fixtures::NamedGraph> graphs;
    if (cfg.suite || cfg.graph_path.empty())
        graphs = fixtures::standard_suite();
    else
        graphs.push_back({cfg.graph_path, io::read_graph_file(cfg.graph_path)});

    json rows = json::array();
    std::string csv = "graph,eps,eps_limit,xi,gfs,sample_size,b0_vr,b1_vr,b0_graph,b1_graph,holds\n";
    for (const auto& [name, desc] : graphs) {
        const MetricGraph g(desc);
        const double step = feature_step(cfg, g);
        double eps = 0.0;
        if (cfg.eps) {
            eps = *cfg.eps;
        } else {
            const FeatureSizeEstimate gfs = g.gfs(step);
            eps = cfg.fraction * (gfs.estimate - gfs.error_bound) / (2.0 * (2.0 + g.xi()));
        }
        const ConjectureReport r = conjecture_test(g, eps, cfg.seed, sample_mode(cfg.mode), step);
        spdlog::info("{}: VR ({}, {}) vs graph ({}, {})", name, r.b0_vr, r.b1_vr, r.b0_graph, r.b1_graph);
        rows.push_back({{"graph", name},
                        {"eps", r.eps},
                        {"eps_limit", r.eps_limit},
                        {"xi", r.xi},
                        {"gfs", r.gfs},
                        {"vr_scale", r.vr_scale},
                        {"sample_size", r.sample_size},
                        {"vr_edges", r.vr_edges},
                        {"vr_triangles", r.vr_triangles},
                        {"betti_vr", {r.b0_vr, r.b1_vr}},
                        {"betti_graph", {r.b0_graph, r.b1_graph}},
                        {"holds", r.holds}});
        csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", name, io::format_real(r.eps),
                           io::format_real(r.eps_limit), io::format_real(r.xi), io::format_real(r.gfs), r.sample_size,
                           r.b0_vr, r.b1_vr, r.b0_graph, r.b1_graph, r.holds ? "true" : "false");
    }
    if (cfg.format == "csv")
        write_text(cfg.out, csv);
    else
        emit(cfg, rows);
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg)
{
    if (cfg.grid.empty())
        throw CommandError(kExitUsage, "sweep: --grid must list at least one eps value");
    for (double e : cfg.grid)
        if (!(e > 0.0))
            throw CommandError(kExitUsage, fmt::format("sweep: grid values must be positive, got {}", e));
    if (cfg.trials == 0)
        throw CommandError(kExitUsage, "sweep: --trials must be >= 1");

    const MetricGraph g = load_graph(cfg.graph_path);
    const Algorithm1Method method = algorithm_method(cfg.method);
    const double xi = cfg.xi.value_or(g.xi());
    const double threshold = g.gfs(feature_step(cfg, g)).estimate / xi;
    const std::size_t truth = g.betti().b1;

    struct Outcome {
        bool success = false;
        std::size_t b1_k1 = 0;
    };
    const std::size_t jobs = cfg.grid.size() * cfg.trials;
    std::vector<Outcome> outcomes(jobs);
    parallel_for(jobs, [&](std::size_t job) {
        const double eps = cfg.grid[job / cfg.trials];
        const std::uint64_t seed = derive_seed(cfg.seed, job % cfg.trials);
        const Sample s = sample_cover(g, eps, SampleMode::Jittered, seed);
        const Algorithm1Result r = algorithm1(s, eps, xi, method);
        outcomes[job] = {r.b1_estimate == truth, r.b1_k1};
    });

    std::string csv = "eps,eps_over_threshold,success_rate,mean_b1_K1\n";
    for (std::size_t row = 0; row < cfg.grid.size(); ++row) {
        std::size_t ok = 0;
        double k1 = 0.0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            ok += outcomes[row * cfg.trials + t].success ? 1 : 0;
            k1 += static_cast<double>(outcomes[row * cfg.trials + t].b1_k1);
        }
        const double n = static_cast<double>(cfg.trials);
        csv += fmt::format("{},{},{},{}\n", io::format_real(cfg.grid[row]), io::format_real(cfg.grid[row] / threshold),
                           io::format_real(static_cast<double>(ok) / n), io::format_real(k1 / n));
    }
    write_text(cfg.out, csv);
    return kExitOk;
}

int cmd_render(const RunConfig& cfg)
{
    SvgScene scene;
    if (!cfg.complex_path.empty()) {
        const SimplicialComplex2 k = io::read_complex_file(cfg.complex_path);
        const Sample s = load_points(cfg.points_path);
        if (k.vertex_count() != s.size())
            throw CommandError(kExitUsage, fmt::format("render: complex has {} vertices but {} points were given",
                                                       k.vertex_count(), s.size()));
        scene = complex_scene(k, s);
    } else if (!cfg.polyline_path.empty()) {
        scene = polyline_scene({io::read_polyline_file(cfg.polyline_path)});
        if (!cfg.points_path.empty())
            for (const Point& p : load_points(cfg.points_path).points)
                scene.points.push_back(p);
    } else {
        throw CommandError(kExitUsage, "render: give --complex with --points, or --polyline");
    }
    write_text(cfg.out, render_svg(scene));
    return kExitOk;
}

int cmd_verify_oracles(const RunConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed);
    std::size_t betti_bad = 0;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        const double p = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
        const SimplicialComplex2 k = fixtures::random_complex(rng, n, p, 0.5);
        const auto [b0, b1] = oracles::betti_bruteforce(k);
        betti_bad += betti_numbers(k) == Betti{b0, b1} ? 0 : 1;
    }
    std::size_t image_bad = 0;
    const std::size_t pairs = std::max<std::size_t>(cfg.count / 2, 1);
    for (std::size_t i = 0; i < pairs; ++i) {
        const NervePair p = fixtures::random_nested_pair(rng, std::uniform_int_distribution<std::size_t>(3, 10)(rng), 20);
        image_bad += image_rank(p.k1, p.k2) == oracles::image_rank_bruteforce(p.k1, p.k2) ? 0 : 1;
    }
    json gfs = json::array();
    std::size_t gfs_bad = 0;
    for (const auto& [name, desc] : fixtures::standard_suite()) {
        const MetricGraph g(desc);
        const double step = 1e-3 * g.shortest_edge_length();
        const FeatureSizeEstimate est = g.gfs(step);
        const double oracle = oracles::gfs_bruteforce(desc, step);
        const bool ok = std::abs(est.estimate - oracle) <= 2.0 * est.error_bound;
        gfs_bad += ok ? 0 : 1;
        gfs.push_back({{"graph", name}, {"estimate", est.estimate}, {"oracle", oracle}, {"ok", ok}});
    }
    emit(cfg, {{"betti", {{"checked", cfg.count}, {"mismatches", betti_bad}}},
               {"image_rank", {{"checked", pairs}, {"mismatches", image_bad}}},
               {"gfs", gfs}});
    return betti_bad + image_bad + gfs_bad == 0 ? kExitOk : kExitFailure;
}

}  // namespace mgrecon::tools
