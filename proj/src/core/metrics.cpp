#include "core/metrics.hpp"

#include <charconv>
#include <cmath>

#include "core/errors.hpp"

namespace ecoclust {

LabeledMatrix LabeledMatrix::zeros(std::vector<std::string> labels) {
    LabeledMatrix m;
    m.labels = std::move(labels);
    m.v.assign(m.labels.size() * m.labels.size(), 0.0);
    return m;
}

int LabeledMatrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

MetricSpec parse_metric(const std::string& text) {
    MetricSpec m;
    if (text == "statistical") {
        m.kind = MetricKind::statistical;
        return m;
    }
    if (text == "euclidean") {
        m.kind = MetricKind::minkowski;
        m.p = m.r = 2.0;
        return m;
    }
    if (text.rfind("minkowski:", 0) == 0) {
        const std::string rest = text.substr(10);
        const auto sep = rest.find(':');
        if (sep != std::string::npos) {
            double p = 0, r = 0;
            const std::string ps = rest.substr(0, sep), rs = rest.substr(sep + 1);
            auto ok = [](const std::string& s, double& out) {
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
                return ec == std::errc() && ptr == s.data() + s.size();
            };
            if (ok(ps, p) && ok(rs, r) && p > 0 && r > 0) {
                m.kind = MetricKind::minkowski;
                m.p = p;
                m.r = r;
                return m;
            }
        }
    }
    throw input_error("unknown metric '" + text +
                      "' (expected statistical, euclidean or minkowski:<p>:<r>)");
}

std::string metric_name(const MetricSpec& m) {
    if (m.kind == MetricKind::statistical) return "statistical";
    if (m.p == 2.0 && m.r == 2.0) return "euclidean";
    char buf[64];
    std::snprintf(buf, sizeof buf, "minkowski:%g:%g", m.p, m.r);
    return buf;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw input_error("correlation inputs have different lengths");
    const std::size_t n = x.size();
    if (n < 2) throw insufficient_error("correlation needs at least 2 points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw degenerate_error("correlation undefined for a constant series");
    return sxy / std::sqrt(sxx * syy);
}

double statistical_distance(double c) {
    if (std::abs(c) > 1.0 + 1e-12)
        throw input_error("correlation " + std::to_string(c) + " outside [-1, 1]");
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::sqrt(2.0 * (1.0 - c));
}

double minkowski_distance(std::span<const double> x, std::span<const double> y,
                          double p, double r) {
    if (x.size() != y.size())
        throw input_error("distance inputs have different lengths");
    if (p <= 0.0 || r <= 0.0) throw input_error("minkowski exponents must be positive");
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i] - y[i]), p);
    return std::pow(s, 1.0 / r);
}

DistanceResult distance_matrix(const Panel& panel, const Window& w, const MetricSpec& m) {
    const std::size_t n = panel.n_entities();
    if (n < 2) throw insufficient_error("distance matrix needs at least 2 entities");

    std::vector<std::span<const double>> series;
    series.reserve(n);
    for (std::size_t e = 0; e < n; ++e) {
        if (panel.values[e].size() < w.start + w.length)
            throw insufficient_error("entity '" + panel.entities[e] +
                                     "' does not cover window " + w.label);
        series.emplace_back(panel.values[e].data() + w.start, w.length);
    }

    DistanceResult out{LabeledMatrix::zeros(panel.entities), std::nullopt};
    if (m.kind == MetricKind::statistical) {
        // Constant sub-series cannot enter the correlation; name the culprit.
        for (std::size_t e = 0; e < n; ++e) {
            const auto& s = series[e];
            bool constant = true;
            for (std::size_t t = 1; t < s.size(); ++t)
                if (s[t] != s[0]) {
                    constant = false;
                    break;
                }
            if (constant)
                throw degenerate_error("entity '" + panel.entities[e] +
                                       "' is constant over window " + w.label);
        }
        out.corr = LabeledMatrix::zeros(panel.entities);
        for (std::size_t i = 0; i < n; ++i) out.corr->at(i, i) = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double c = pearson(series[i], series[j]);
                const double d = statistical_distance(c);
                out.corr->at(i, j) = out.corr->at(j, i) = c;
                out.dist.at(i, j) = out.dist.at(j, i) = d;
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d = minkowski_distance(series[i], series[j], m.p, m.r);
                out.dist.at(i, j) = out.dist.at(j, i) = d;
            }
    }
    return out;
}

std::vector<double> upper_triangle(const LabeledMatrix& m) {
    std::vector<double> out;
    const std::size_t n = m.n();
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(m.at(i, j));
    return out;
}

MatrixMoments matrix_moments(const LabeledMatrix& dist) {
    const std::size_t n = dist.n();
    if (n < 3)
        throw insufficient_error("matrix moments need at least 3 entities, got " +
                                 std::to_string(n));
    const auto vals = upper_triangle(dist);
    const double m = static_cast<double>(vals.size());
    MatrixMoments out;
    for (double v : vals) out.mean += v;
    out.mean /= m;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : vals) {
        const double d = v - out.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= m;
    m3 /= m;
    m4 /= m;
    out.variance = m2;
    out.sigma = std::sqrt(m2);
    if (out.sigma == 0.0)
        throw degenerate_error("distance multiset has zero dispersion");
    out.skewness = m3 / (out.sigma * out.sigma * out.sigma);
    out.kurtosis_raw = m4 / (m2 * m2);
    out.kurtosis_excess = out.kurtosis_raw - 3.0;
    return out;
}

} // namespace ecoclust
