#include "core/trendstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ecoclust {

std::vector<TrendPoint> trend_series(const Panel& p, std::size_t T, std::size_t step,
                                     const MetricSpec& metric) {
    const auto windows = make_windows(p, T, step);
    if (windows.size() < 2)
        throw insufficient_error("trend needs at least 2 windows, got " +
                                 std::to_string(windows.size()));
    std::vector<TrendPoint> out;
    for (const auto& w : windows) {
        const auto dm = distance_matrix(p, w, metric);
        MatrixMoments mm;
        try {
            mm = matrix_moments(dm.dist);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::degenerate)
                throw degenerate_error("window " + w.label + ": " + e.what());
            throw;
        }
        out.push_back({w.label, mm.mean / mm.sigma});
    }
    return out;
}

std::vector<double> moving_average(const std::vector<double>& v, std::size_t k) {
    if (k < 1) throw input_error("moving average order must be at least 1");
    if (k > v.size())
        throw insufficient_error("moving average order " + std::to_string(k) +
                                 " exceeds series length " + std::to_string(v.size()));
    std::vector<double> out;
    out.reserve(v.size() - k + 1);
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += v[i];
        if (i + 1 >= k) {
            out.push_back(s / static_cast<double>(k));
            s -= v[i + 1 - k];
        }
    }
    return out;
}

ExpDecayFit fit_exp_decay(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 3) throw insufficient_error("exponential fit needs at least 3 points");
    for (double v : values)
        if (v <= 0.0)
            throw degenerate_error("exponential fit needs positive values");

    // Log-linear least squares against the 1-based index, centered form so a
    // constant input yields an exactly zero slope.
    const double N = static_cast<double>(n);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += static_cast<double>(i + 1);
        my += std::log(values[i]);
    }
    mx /= N;
    my /= N;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = static_cast<double>(i + 1) - mx;
        const double dy = std::log(values[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    ExpDecayFit fit;
    fit.points = static_cast<int>(n);
    fit.amplitude = std::exp(intercept);
    fit.decaying = slope < 0.0;
    fit.tau = fit.decaying ? -1.0 / slope : std::numeric_limits<double>::infinity();

    double mean = 0;
    for (double v : values) mean += v;
    mean /= N;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double fitted = std::exp(intercept + slope * static_cast<double>(i + 1));
        ss_res += (values[i] - fitted) * (values[i] - fitted);
        ss_tot += (values[i] - mean) * (values[i] - mean);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

namespace {

struct MeanSigma {
    double mean, sigma;
};

MeanSigma mean_sigma(const std::vector<double>& v) {
    double m = 0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    double s2 = 0;
    for (double x : v) s2 += (x - m) * (x - m);
    s2 /= static_cast<double>(v.size());
    return {m, std::sqrt(s2)};
}

// Nearest-rank percentile on the sorted stats, index scale 0..R-1.
std::pair<double, double> percentile_interval(std::vector<double> stats, double level) {
    std::sort(stats.begin(), stats.end());
    const double alpha = (1.0 - level) / 2.0;
    const double top = static_cast<double>(stats.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(alpha * top));
    const auto hi = static_cast<std::size_t>(std::ceil((1.0 - alpha) * top));
    return {stats[lo], stats[hi]};
}

} // namespace

BootstrapCi bootstrap_ci(const std::vector<double>& values, double level,
                         std::size_t resamples, std::uint64_t seed) {
    const std::size_t n = values.size();
    if (n < 3) throw insufficient_error("bootstrap needs a multiset of at least 3 values");
    if (resamples < 100) throw input_error("bootstrap needs at least 100 resamples");
    if (!(level > 0.0 && level < 1.0))
        throw input_error("bootstrap level must lie strictly between 0 and 1");

    const auto base = mean_sigma(values);
    if (base.sigma == 0.0)
        throw degenerate_error("bootstrap multiset has zero dispersion");

    BootstrapCi out;
    out.mean = base.mean;
    out.sigma = base.sigma;
    out.std_mean = base.mean / base.sigma;

    const Rng root(seed);
    std::vector<double> means, sigmas, std_means;
    means.reserve(resamples);
    sigmas.reserve(resamples);
    std_means.reserve(resamples);
    std::vector<double> draw(n);
    for (std::size_t r = 0; r < resamples; ++r) {
        Rng rng = root.derive(r);
        MeanSigma ms{0, 0};
        bool ok = false;
        for (int attempt = 0; attempt < 10 && !ok; ++attempt) {
            for (std::size_t i = 0; i < n; ++i)
                draw[i] = values[static_cast<std::size_t>(rng.below(n))];
            ms = mean_sigma(draw);
            ok = ms.sigma > 0.0;
        }
        if (!ok)
            throw degenerate_error("bootstrap resample " + std::to_string(r) +
                                   " kept zero dispersion after 10 redraws");
        means.push_back(ms.mean);
        sigmas.push_back(ms.sigma);
        std_means.push_back(ms.mean / ms.sigma);
    }
    std::tie(out.mean_lo, out.mean_hi) = percentile_interval(means, level);
    std::tie(out.sigma_lo, out.sigma_hi) = percentile_interval(sigmas, level);
    std::tie(out.std_mean_lo, out.std_mean_hi) = percentile_interval(std_means, level);
    return out;
}

std::vector<MomentsPoint> moments_series(const Panel& p, std::size_t T, std::size_t step,
                                         const MetricSpec& metric) {
    const auto windows = make_windows(p, T, step);
    std::vector<MomentsPoint> out;
    for (const auto& w : windows) {
        const auto dm = distance_matrix(p, w, metric);
        out.push_back({w.label, matrix_moments(dm.dist)});
    }
    return out;
}

SigmaConvergence sigma_convergence(const Panel& levels, int year, int span) {
    if (span < 1) throw input_error("sigma convergence span must be at least 1");
    const auto find_year = [&](int y) -> std::size_t {
        for (std::size_t i = 0; i < levels.years.size(); ++i)
            if (levels.years[i] == y) return i;
        throw input_error("year " + std::to_string(y) + " is not on the panel axis");
    };
    const std::size_t t0 = find_year(year);
    const std::size_t t1 = find_year(year + span);
    const std::size_t L = levels.common_years();
    if (t1 >= L)
        throw insufficient_error("year " + std::to_string(year + span) +
                                 " lies past the common year range");

    const auto cross_var = [&](std::size_t t) {
        std::vector<double> logs;
        for (std::size_t e = 0; e < levels.n_entities(); ++e) {
            const double v = levels.values[e][t];
            if (v <= 0.0)
                throw degenerate_error("entity '" + levels.entities[e] +
                                       "' has a non-positive value at year " +
                                       std::to_string(levels.years[t]));
            logs.push_back(std::log(v));
        }
        const double s = mean_sigma(logs).sigma;
        return s * s;
    };

    SigmaConvergence out;
    out.var_start = cross_var(t0);
    out.var_end = cross_var(t1);
    if (out.var_end < out.var_start)
        out.verdict = SigmaVerdict::converging;
    else if (out.var_end > out.var_start)
        out.verdict = SigmaVerdict::diverging;
    else
        out.verdict = SigmaVerdict::neither;
    return out;
}

} // namespace ecoclust
