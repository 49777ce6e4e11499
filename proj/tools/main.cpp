#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mgrecon/complex.hpp"
#include "mgrecon/curve.hpp"
#include "mgrecon/graph.hpp"
#include "mgrecon/io.hpp"

using namespace mgrecon;
using namespace mgrecon::tools;

namespace {

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("mgrecon");
    logger->set_pattern("%^%l%$: %v");
    spdlog::set_default_logger(logger);
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("RECON_LOG")) {
        level = spdlog::level::from_str(env);
        // from_str maps unknown names to "off"; keep warnings in that case.
        if (level == spdlog::level::off && std::string(env) != "off")
            level = spdlog::level::warn;
    }
    spdlog::set_level(level);
}

struct Subcommand {
    CLI::App* app;
    std::function<int(const RunConfig&)> run;
};

void add_graph(CLI::App* sub, RunConfig& cfg, bool required = true)
{
    auto* opt = sub->add_option("--graph,graph", cfg.graph_path, "graph JSON file");
    if (required)
        opt->required();
}

void add_eps(CLI::App* sub, RunConfig& cfg) { sub->add_option("--eps", cfg.eps, "ball radius"); }
void add_out(CLI::App* sub, RunConfig& cfg) { sub->add_option("--out,-o", cfg.out, "output file (default stdout)"); }
void add_step(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--step", cfg.step, "gfs discretization step (default 1e-3 l)");
}

}  // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"Topology reconstruction from point samples of metric graphs and curves", "mgrecon"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mgrecon 0.1.0");

    RunConfig cfg;
    std::map<std::string, Subcommand> subs;
    auto add = [&](const std::string& name, const std::string& help, std::function<int(const RunConfig&)> run) {
        CLI::App* sub = app.add_subcommand(name, help);
        subs[name] = {sub, std::move(run)};
        return sub;
    };

    {
        auto* s = add("features", "print l, xi, gfs and the eps threshold of a graph", cmd_features);
        add_graph(s, cfg);
        add_step(s, cfg);
        add_out(s, cfg);
    }
    {
        auto* s = add("sample", "sample points from a graph", cmd_sample);
        add_graph(s, cfg);
        add_eps(s, cfg);
        s->add_option("--mode", cfg.mode, "uniform | jittered | random");
        s->add_option("--n", cfg.n, "number of points for --mode random");
        s->add_option("--seed", cfg.seed);
        add_out(s, cfg);
    }
    {
        auto* s = add("cover-check", "check that eps-balls around the points cover the graph", cmd_cover_check);
        add_graph(s, cfg);
        s->add_option("--points", cfg.points_path)->required();
        add_eps(s, cfg);
        add_out(s, cfg);
    }
    {
        auto* s = add("nerve", "write the Cech nerve of a point file", cmd_nerve);
        s->add_option("--points,points", cfg.points_path)->required();
        add_eps(s, cfg);
        add_out(s, cfg);
        s->add_option("--svg", cfg.svg, "also render the nerve to this SVG file");
    }
    {
        auto* s = add("betti", "Betti numbers of a complex file or of a Cech nerve", cmd_betti);
        s->add_option("--complex", cfg.complex_path);
        s->add_option("--points", cfg.points_path);
        add_eps(s, cfg);
        add_out(s, cfg);
    }
    {
        auto* s = add("reconstruct-graph", "estimate b1 of the sampled graph", cmd_reconstruct_graph);
        add_graph(s, cfg, false);
        s->add_option("--points", cfg.points_path, "raw sample (requires --xi)");
        add_eps(s, cfg);
        s->add_option("--xi", cfg.xi, "angle parameter; required for raw points");
        s->add_option("--method", cfg.method, "literal | image-rank")->check(CLI::IsMember({"literal", "image-rank"}));
        s->add_option("--mode", cfg.mode, "sampling mode for ground-truth runs: uniform | jittered");
        s->add_option("--seed", cfg.seed);
        add_step(s, cfg);
        add_out(s, cfg);
        s->add_option("--svg", cfg.svg, "render the eps nerve");
    }
    {
        auto* s = add("reconstruct-curve", "closed polyline through a planar curve sample", cmd_reconstruct_curve);
        s->add_option("--points,points", cfg.points_path)->required();
        add_eps(s, cfg);
        s->add_option("--mode", cfg.mode, "given | nearest-neighbor");
        s->add_option("--polyline", cfg.polyline_path, "write the polyline here");
        s->add_option("--probes", cfg.probes, "medial-axis probes per segment");
        s->add_option("--boundary", cfg.boundary, "boundary points for the medial-axis check");
        add_out(s, cfg);
        s->add_option("--svg", cfg.svg);
    }
    {
        auto* s = add("conjecture-test", "compare Rips Betti numbers of the nerve skeleton metric with the graph",
                      cmd_conjecture_test);
        add_graph(s, cfg, false);
        s->add_flag("--suite", cfg.suite, "run on the built-in fixture suite");
        add_eps(s, cfg);
        s->add_option("--fraction", cfg.fraction, "eps as a fraction of the conjectured limit");
        s->add_option("--seed", cfg.seed);
        s->add_option("--mode", cfg.mode, "uniform | jittered");
        s->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
        add_step(s, cfg);
        add_out(s, cfg);
    }
    {
        auto* s = add("sweep", "success rate of the b1 estimate over an eps grid", cmd_sweep);
        add_graph(s, cfg);
        s->add_option("--grid", cfg.grid, "comma separated eps values")->delimiter(',')->required();
        s->add_option("--trials", cfg.trials);
        s->add_option("--seed", cfg.seed);
        s->add_option("--xi", cfg.xi);
        s->add_option("--method", cfg.method)->check(CLI::IsMember({"literal", "image-rank"}));
        add_step(s, cfg);
        add_out(s, cfg);
    }
    {
        auto* s = add("render", "render a complex or polyline as SVG", cmd_render);
        s->add_option("--complex", cfg.complex_path);
        s->add_option("--points", cfg.points_path);
        s->add_option("--polyline", cfg.polyline_path);
        add_out(s, cfg);
    }
    {
        auto* s = add("verify-oracles", "cross-check the library against brute-force oracles", cmd_verify_oracles);
        s->add_option("--seed", cfg.seed);
        s->add_option("--count", cfg.count, "random complexes to check");
        add_out(s, cfg);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [name, sub] : subs) {
        if (!sub.app->parsed())
            continue;
        cfg.subcommand = name;
        try {
            return sub.run(cfg);
        } catch (const CommandError& e) {
            spdlog::error("{}", e.what());
            return e.code();
        } catch (const io::ParseError& e) {
            spdlog::error("{}", e.what());
            return kExitUsage;
        } catch (const GraphValidationError& e) {
            spdlog::error("invalid graph:");
            for (const std::string& v : e.report().violations)
                spdlog::error("  {}", v);
            return kExitInvalidGraph;
        } catch (const ThresholdError& e) {
            spdlog::error("{}", e.what());
            return kExitUsage;
        } catch (const CurveError& e) {
            spdlog::error("{}", e.what());
            return kExitCurveRejected;
        } catch (const std::invalid_argument& e) {
            spdlog::error("{}", e.what());
            return kExitUsage;
        } catch (const std::domain_error& e) {
            spdlog::error("{}", e.what());
            return kExitUsage;
        } catch (const std::exception& e) {
            spdlog::error("{}", e.what());
            return kExitFailure;
        }
    }
    return kExitUsage;
}
