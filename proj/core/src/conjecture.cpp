#include <fmt/format.h>

#include "mgrecon/complex.hpp"
#include "mgrecon/homology.hpp"

namespace mgrecon {

ConjectureReport conjecture_test(const MetricGraph& graph, double eps, std::uint64_t seed, SampleMode mode,
                                 double gfs_step)
{
    ConjectureReport report;
    report.eps = eps;
    report.xi = graph.xi();
    const double step = gfs_step > 0.0 ? gfs_step : 1e-3 * graph.shortest_edge_length();
    // Use the conservative end of the estimate for the admissibility check.
    const FeatureSizeEstimate gfs = graph.gfs(step);
    report.gfs = gfs.estimate;
    report.eps_limit = (gfs.estimate - gfs.error_bound) / (2.0 * (2.0 + report.xi));
    if (!(eps > 0.0) || !(eps < report.eps_limit))
        throw ThresholdError(fmt::format("conjecture_test: eps = {} must lie in (0, gfs/(2(2+xi))) = (0, {}) "
                                         "(gfs = {} +- {}, xi = {})",
                                         eps, report.eps_limit, gfs.estimate, gfs.error_bound, report.xi));

    const Sample sample = sample_cover(graph, eps, mode, seed);
    const SimplicialComplex2 k1 = cech_nerve(sample, eps);
    const MetricMatrix metric = skeleton_geodesic_metric(k1, sample);
    report.vr_scale = 2.0 * (1.0 + report.xi) * eps;
    const SimplicialComplex2 vr = vietoris_rips(metric, report.vr_scale);

    const Betti vr_betti = betti_numbers(vr);
    const GraphBetti truth = graph.betti();
    report.b0_vr = vr_betti.b0;
    report.b1_vr = vr_betti.b1;
    report.b0_graph = truth.b0;
    report.b1_graph = truth.b1;
    report.sample_size = sample.size();
    report.vr_edges = vr.edges().size();
    report.vr_triangles = vr.triangles().size();
    report.holds = vr_betti.b0 == truth.b0 && vr_betti.b1 == truth.b1;
    return report;
}

}  // namespace mgrecon
