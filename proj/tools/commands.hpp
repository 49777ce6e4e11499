#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgrecon::tools {

// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitInvalidGraph = 3,
    kExitNotCovered = 4,
    kExitCurveRejected = 5,
};

/// Error carrying the exit code the process should end with.
class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

/// Everything the subcommands read from the command line.
struct RunConfig {
    std::string subcommand;
    std::string graph_path;
    std::string points_path;
    std::string complex_path;
    std::string polyline_path;
    std::optional<double> eps;
    std::optional<double> xi;
    std::optional<double> step;
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    std::size_t n = 0;
    std::string method = "literal";
    std::string mode;
    std::string out;
    std::string svg;
    std::string format = "json";
    std::vector<double> grid;
    double fraction = 0.9;
    bool suite = false;
    std::size_t probes = 8;
    std::size_t boundary = 10000;
    std::size_t count = 100;
};

int cmd_features(const RunConfig& cfg);
int cmd_sample(const RunConfig& cfg);
int cmd_cover_check(const RunConfig& cfg);
int cmd_nerve(const RunConfig& cfg);
int cmd_betti(const RunConfig& cfg);
int cmd_reconstruct_graph(const RunConfig& cfg);
int cmd_reconstruct_curve(const RunConfig& cfg);
int cmd_conjecture_test(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg);
int cmd_render(const RunConfig& cfg);
int cmd_verify_oracles(const RunConfig& cfg);

}  // namespace mgrecon::tools
