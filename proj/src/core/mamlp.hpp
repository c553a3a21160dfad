#pragma once

#include <string>
#include <vector>

#include "core/hierarchy.hpp"
#include "core/metrics.hpp"
#include "core/panel.hpp"

namespace ecoclust {

inline constexpr const char* kAvgLabel = "AVG";

enum class AvgMode { mean, sum };
enum class MlpMode { max_edge, path_sum };
enum class ConstantRowPolicy { fail, skip };

// Panel plus the synthetic average agent: per year, the cross-entity mean
// (or sum) over the common year range. Rejects panels already holding "AVG".
Panel augment_average(const Panel& p, AvgMode mode = AvgMode::mean);

// Distance of every real entity to AVG along the minimum spanning tree of
// the augmented matrix: the maximum edge on the path (subdominant
// ultrametric) or the path sum. Order follows the matrix without AVG.
std::vector<double> mlp_distances(const LabeledMatrix& augmented_dist, MlpMode mode);

// dhat trajectories: one row per entity, one column per window.
struct MlpTable {
    std::string indicator;
    std::vector<std::string> entities;
    std::vector<std::string> window_labels;
    std::vector<std::vector<double>> values; // [entity][window]

    std::size_t n_entities() const { return entities.size(); }
    std::size_t n_windows() const { return window_labels.size(); }
};

MlpTable mlp_table(const Panel& p, std::size_t T, std::size_t step,
                   const MetricSpec& metric, MlpMode mode,
                   AvgMode avg_mode = AvgMode::mean);

// Pearson correlations between entity dhat rows. A constant row either
// fails (default) or is excluded and reported.
struct MovementCorrelations {
    LabeledMatrix corr;
    std::vector<std::string> excluded;
};

MovementCorrelations movement_correlations(const MlpTable& t,
                                           ConstantRowPolicy policy = ConstantRowPolicy::fail);

struct StrongLink {
    std::string a, b;
    double c = 0;
};

struct StrongLinks {
    std::vector<StrongLink> positive; // c >= pos_thr
    std::vector<StrongLink> negative; // c <= neg_thr
};

StrongLinks strong_links(const LabeledMatrix& corr, double pos_thr, double neg_thr);

// Partition induced by the strong links: connected components of the
// positive-link graph with >= 2 members are clusters; entities with only
// negative strong links are anti-correlated outliers; the rest float.
struct ClusterPartition {
    std::vector<std::vector<std::string>> clusters;
    std::vector<std::string> outliers;
    std::vector<std::string> unclustered;
};

ClusterPartition cluster_partition(const LabeledMatrix& corr, double pos_thr, double neg_thr);

// chi_i = sum over j != i of c_ij^2, sorted descending (ties on label).
struct SensitivityEntry {
    std::string entity;
    double chi = 0;
};

std::vector<SensitivityEntry> sensitivity(const LabeledMatrix& corr);

} // namespace ecoclust
