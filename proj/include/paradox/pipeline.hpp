#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "paradox/degree_stats.hpp"
#include "paradox/exceedance.hpp"
#include "paradox/generate.hpp"
#include "paradox/graph.hpp"
#include "paradox/lognormal.hpp"
#include "paradox/models.hpp"
#include "paradox/paradox.hpp"

namespace paradox {

/// Everything cmd_analyze derives from one graph.
struct AnalyzeResult {
    DegreeStats stats;
    ExceedanceProfile exceedance;
    ParadoxProfile observed;
    double q_exceed = 0.0;
    Degree k_c = 0;
    Degree mu_crossing = 0;
    XbarDistribution xbar_at_kc;
};

AnalyzeResult analyze_graph(const Graph& g, ParadoxDefinition definition);

/// Everything cmd_predict derives: per-degree predictions of all three models.
struct PredictResult {
    ModelInputs inputs;
    ParadoxProfile p2k_binomial;
    ParadoxProfile p2k_gauss;
    ParadoxProfile p3k;
};

PredictResult predict_graph(const Graph& g);

/// One sweep row, optionally with measurements from a generated graph.
struct SweepRow {
    double c = 0.0;
    double r_analytic = 0.0;
    double p_analytic = 0.0;
    std::optional<double> r_measured;
    std::optional<double> global_p_measured;
};

struct SweepConfig {
    double m = 2.5;
    double s = 1.25;
    std::vector<double> c_grid;
    Degree k_max = 10000;
    // empirical mode: generate one graph per c and measure r / global_p
    std::optional<std::int64_t> empirical_nodes;
    std::uint64_t seed = 1;
};

std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// CSV writers shared by the CLI and the test suites. All emit a header row,
/// '.' decimal separator, rows sorted by degree/parameter.
void write_p_csv(const DegreeStats& s, std::ostream& out);
void write_q_csv(const DegreeStats& s, std::ostream& out);
void write_e_csv(const DegreeStats& s, std::ostream& out);
void write_summary_json(const AnalyzeResult& r, std::ostream& out);
void write_exceedance_csv(const ExceedanceProfile& p, std::ostream& out);
void write_binned_rho_csv(const std::vector<BinnedRho>& bins, std::ostream& out);
void write_xbar_csv(const XbarDistribution& d, std::ostream& out);
void write_observed_csv(const ParadoxProfile& p, std::ostream& out);
void write_predictions_csv(const PredictResult& r, std::ostream& out);
void write_predict_summary_json(const PredictResult& r, std::ostream& out);
void write_sweep_fig_a_csv(double m, double s, std::span<const double> c_grid, Degree k_points,
                           std::ostream& out);
void write_sweep_fig_b_csv(const std::vector<SweepRow>& rows, std::ostream& out);

} // namespace paradox
