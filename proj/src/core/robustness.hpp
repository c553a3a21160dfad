#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/mamlp.hpp"
#include "core/metrics.hpp"
#include "core/panel.hpp"
#include "core/rng.hpp"

namespace ecoclust {

enum class ShuffleAxis { columns, rows, both };

// Windowed distance matrices with their labels, the unit the stack shuffle
// permutes across.
struct DistanceStack {
    std::vector<std::string> window_labels;
    std::vector<LabeledMatrix> matrices;
};

DistanceStack distance_stack(const Panel& p, std::size_t T, std::size_t step,
                             const MetricSpec& metric);

// Permute each pair slot independently across windows. Every slot keeps its
// value multiset; only the time order is destroyed.
DistanceStack shuffle_distance_stack(const DistanceStack& s, Rng& rng);

// Standardized mean distance per window of a stack.
std::vector<double> stack_trend(const DistanceStack& s);

struct StackShuffleReport {
    std::uint64_t seed = 0;
    double real_variation = 0;     // max - min of the real trend
    double shuffled_amplitude = 0; // max - min after shuffling
    double ratio = 0;              // amplitude / real variation
};

StackShuffleReport stack_shuffle_report(const DistanceStack& s, std::uint64_t seed);

// Permute dhat values: columns = within each window across entities,
// rows = within each entity across windows, both = rows first then columns.
MlpTable shuffle_mlp_table(const MlpTable& t, ShuffleAxis axis, Rng& rng);

struct MlpShuffleReport {
    std::uint64_t seed = 0;
    double c_max = 0; // largest off-diagonal movement correlation
    double c_min = 0; // smallest
    int strong_links = 0;
};

MlpShuffleReport mlp_shuffle_report(const MlpTable& t, ShuffleAxis axis, std::uint64_t seed,
                                    double pos_thr, double neg_thr);

// Strong-link census across shuffled replicas, with the real table's counts
// alongside for comparison.
struct RandomizationRun {
    std::uint64_t seed = 0;
    int positive = 0;
    int negative = 0;
};

struct RandomizationSummary {
    std::vector<RandomizationRun> runs;
    double fraction_zero_strong = 0; // runs with no strong link at all
    int real_positive = 0;
    int real_negative = 0;
};

RandomizationSummary randomization_summary(const MlpTable& t, ShuffleAxis axis,
                                           std::size_t n_runs, std::uint64_t base_seed,
                                           double pos_thr, double neg_thr);

} // namespace ecoclust
