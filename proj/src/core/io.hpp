#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/factorgraph.hpp"
#include "core/mamlp.hpp"
#include "core/metrics.hpp"
#include "core/robustness.hpp"
#include "core/trendstats.hpp"

namespace ecoclust {

// All emitters produce UTF-8 text with LF line ends and fixed 6-decimal
// numbers, so a rerun writes byte-identical artifacts.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string matrix_to_csv(const LabeledMatrix& m);
LabeledMatrix matrix_from_csv(const std::string& text, const std::string& source);
LabeledMatrix load_matrix_csv(const std::string& path);

std::string mlp_table_to_csv(const MlpTable& t);
MlpTable mlp_table_from_csv(const std::string& text, const std::string& source,
                            const std::string& indicator);
MlpTable load_mlp_table_csv(const std::string& path, const std::string& indicator);

std::string trend_to_csv(const std::vector<TrendPoint>& points,
                         const std::vector<std::pair<double, double>>* cis);

// step_years converts the window-index decay constant into years.
std::string fit_to_json(const ExpDecayFit& fit, double step_years);

std::string cluster_report_json(const std::string& indicator, double pos_thr,
                                double neg_thr, const ClusterPartition& part,
                                const std::vector<SensitivityEntry>& sens,
                                const std::vector<std::string>& excluded);

std::string factor_graph_to_json(const FactorGraph& g);
std::string cluster_rows_to_csv(const std::vector<ClusterRow>& rows);

struct ShuffleCsvRow {
    std::uint64_t seed = 0;
    std::string mode;
    std::optional<double> amplitude;
    std::optional<double> ratio;
    std::optional<double> c_max;
    std::optional<double> c_min;
    std::optional<int> strong_links;
};

std::string shuffle_rows_to_csv(const std::vector<ShuffleCsvRow>& rows);

std::string randomization_summary_to_json(const RandomizationSummary& s,
                                          const std::string& mode);

std::string format_fixed(double v, int decimals);

} // namespace ecoclust
