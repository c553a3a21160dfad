#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/panel.hpp"

namespace ecoclust {

// Symmetric matrix with entity labels. Used for both distances (zero
// diagonal) and correlations (unit diagonal).
struct LabeledMatrix {
    std::vector<std::string> labels;
    std::vector<double> v; // n*n row-major

    std::size_t n() const { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return v[i * n() + j]; }
    double& at(std::size_t i, std::size_t j) { return v[i * n() + j]; }

    static LabeledMatrix zeros(std::vector<std::string> labels);
    int index_of(const std::string& label) const; // -1 when absent
};

enum class MetricKind { statistical, minkowski };

struct MetricSpec {
    MetricKind kind = MetricKind::statistical;
    double p = 2.0; // minkowski exponent
    double r = 2.0; // minkowski root
};

// Parse "statistical", "euclidean" or "minkowski:<p>:<r>".
MetricSpec parse_metric(const std::string& text);
std::string metric_name(const MetricSpec& m);

// Pearson correlation with population moments (divisor n). A constant
// series has no correlation and raises a degenerate error.
double pearson(std::span<const double> x, std::span<const double> y);

// d = sqrt(2 (1 - c)). Roundoff beyond |c| <= 1 is clamped within 1e-12;
// anything further out is rejected.
double statistical_distance(double c);

// (sum |x_i - y_i|^p)^(1/r); p = r = 2 is the Euclidean distance.
double minkowski_distance(std::span<const double> x, std::span<const double> y,
                          double p, double r);

struct DistanceResult {
    LabeledMatrix dist;
    std::optional<LabeledMatrix> corr; // present for the statistical metric
};

// Pairwise distances between entity sub-series over one window.
DistanceResult distance_matrix(const Panel& panel, const Window& w, const MetricSpec& m);

// Moments of the multiset of n(n-1)/2 distinct off-diagonal values.
// Population denominators throughout; kurtosis_raw is m4 / sigma^4.
struct MatrixMoments {
    double mean = 0;
    double variance = 0;
    double sigma = 0;
    double skewness = 0;
    double kurtosis_raw = 0;
    double kurtosis_excess = 0;
};

MatrixMoments matrix_moments(const LabeledMatrix& dist);

// The distinct-pair multiset itself, row-major upper triangle.
std::vector<double> upper_triangle(const LabeledMatrix& m);

} // namespace ecoclust
