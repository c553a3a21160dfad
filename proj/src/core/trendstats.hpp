#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/metrics.hpp"
#include "core/panel.hpp"

namespace ecoclust {

// Standardized mean distance per window: mean / sigma over the distinct-pair
// multiset. Falling values read as convergence of the panel.
struct TrendPoint {
    std::string label;
    double value = 0;
};

std::vector<TrendPoint> trend_series(const Panel& p, std::size_t T, std::size_t step,
                                     const MetricSpec& metric);

// Trailing moving average of order k; output length n - k + 1.
std::vector<double> moving_average(const std::vector<double>& v, std::size_t k);

// Least-squares fit of y = A exp(-x / tau) on the log scale, x being the
// 1-based point index. r_squared compares fitted to observed values in the
// original scale. A non-negative slope means no decay: `decaying` is false
// and tau is +infinity.
struct ExpDecayFit {
    double amplitude = 0;
    double tau = 0;
    double r_squared = 0;
    bool decaying = false;
    int points = 0;
};

ExpDecayFit fit_exp_decay(const std::vector<double>& values);

// Percentile bootstrap over a value multiset. Each resample draws n values
// with replacement from its own derived stream, so resample r is identical
// whether or not resamples before it ran. A zero-dispersion resample is
// redrawn (10 attempts, then degenerate error).
struct BootstrapCi {
    double mean = 0, mean_lo = 0, mean_hi = 0;
    double sigma = 0, sigma_lo = 0, sigma_hi = 0;
    double std_mean = 0, std_mean_lo = 0, std_mean_hi = 0;
};

BootstrapCi bootstrap_ci(const std::vector<double>& values, double level,
                         std::size_t resamples, std::uint64_t seed);

// Matrix moments for every window.
struct MomentsPoint {
    std::string label;
    MatrixMoments moments;
};

std::vector<MomentsPoint> moments_series(const Panel& p, std::size_t T, std::size_t step,
                                         const MetricSpec& metric);

// Cross-entity variance of ln(values) at year t against year t + span.
enum class SigmaVerdict { converging, diverging, neither };

struct SigmaConvergence {
    SigmaVerdict verdict = SigmaVerdict::neither;
    double var_start = 0;
    double var_end = 0;
};

SigmaConvergence sigma_convergence(const Panel& levels, int year, int span);

} // namespace ecoclust
