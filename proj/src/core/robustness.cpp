#include "core/robustness.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace ecoclust {

DistanceStack distance_stack(const Panel& p, std::size_t T, std::size_t step,
                             const MetricSpec& metric) {
    const auto windows = make_windows(p, T, step);
    DistanceStack s;
    for (const auto& w : windows) {
        s.window_labels.push_back(w.label);
        s.matrices.push_back(distance_matrix(p, w, metric).dist);
    }
    return s;
}

DistanceStack shuffle_distance_stack(const DistanceStack& s, Rng& rng) {
    const std::size_t W = s.matrices.size();
    if (W < 2) throw insufficient_error("stack shuffle needs at least 2 windows");
    const std::size_t n = s.matrices[0].n();
    DistanceStack out = s;
    std::vector<double> slot(W);
    // Pair slots walk the upper triangle row-major; each gets its own
    // permutation from the shared stream.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t w = 0; w < W; ++w) slot[w] = s.matrices[w].at(i, j);
            rng.shuffle(slot);
            for (std::size_t w = 0; w < W; ++w) {
                out.matrices[w].at(i, j) = slot[w];
                out.matrices[w].at(j, i) = slot[w];
            }
        }
    return out;
}

std::vector<double> stack_trend(const DistanceStack& s) {
    std::vector<double> out;
    out.reserve(s.matrices.size());
    for (const auto& m : s.matrices) {
        const auto mm = matrix_moments(m);
        out.push_back(mm.mean / mm.sigma);
    }
    return out;
}

namespace {

double spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

} // namespace

StackShuffleReport stack_shuffle_report(const DistanceStack& s, std::uint64_t seed) {
    const auto real = stack_trend(s);
    StackShuffleReport r;
    r.seed = seed;
    r.real_variation = spread(real);
    if (r.real_variation == 0.0)
        throw degenerate_error("real trend series has zero variation");
    Rng rng(seed);
    const auto shuffled = shuffle_distance_stack(s, rng);
    r.shuffled_amplitude = spread(stack_trend(shuffled));
    r.ratio = r.shuffled_amplitude / r.real_variation;
    return r;
}

MlpTable shuffle_mlp_table(const MlpTable& t, ShuffleAxis axis, Rng& rng) {
    if (t.n_windows() < 2 || t.n_entities() < 2)
        throw insufficient_error("table shuffle needs at least 2 entities and 2 windows");
    MlpTable out = t;
    // Row pass before column pass; the double shuffle composes in that order.
    if (axis == ShuffleAxis::rows || axis == ShuffleAxis::both)
        for (auto& row : out.values) rng.shuffle(row);
    if (axis == ShuffleAxis::columns || axis == ShuffleAxis::both) {
        std::vector<double> col(t.n_entities());
        for (std::size_t w = 0; w < t.n_windows(); ++w) {
            for (std::size_t e = 0; e < t.n_entities(); ++e) col[e] = out.values[e][w];
            rng.shuffle(col);
            for (std::size_t e = 0; e < t.n_entities(); ++e) out.values[e][w] = col[e];
        }
    }
    return out;
}

namespace {

struct CorrExtremes {
    double c_max, c_min;
    int strong;
};

CorrExtremes corr_extremes(const MlpTable& t, double pos_thr, double neg_thr) {
    const auto mc = movement_correlations(t, ConstantRowPolicy::skip);
    const auto links = strong_links(mc.corr, pos_thr, neg_thr);
    double cmax = -2, cmin = 2;
    const std::size_t n = mc.corr.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            cmax = std::max(cmax, mc.corr.at(i, j));
            cmin = std::min(cmin, mc.corr.at(i, j));
        }
    return {cmax, cmin,
            static_cast<int>(links.positive.size() + links.negative.size())};
}

} // namespace

MlpShuffleReport mlp_shuffle_report(const MlpTable& t, ShuffleAxis axis, std::uint64_t seed,
                                    double pos_thr, double neg_thr) {
    Rng rng(seed);
    const MlpTable shuffled = shuffle_mlp_table(t, axis, rng);
    const auto ex = corr_extremes(shuffled, pos_thr, neg_thr);
    MlpShuffleReport r;
    r.seed = seed;
    r.c_max = ex.c_max;
    r.c_min = ex.c_min;
    r.strong_links = ex.strong;
    return r;
}

RandomizationSummary randomization_summary(const MlpTable& t, ShuffleAxis axis,
                                           std::size_t n_runs, std::uint64_t base_seed,
                                           double pos_thr, double neg_thr) {
    if (n_runs < 1) throw input_error("randomization needs at least 1 run");
    RandomizationSummary out;
    {
        const auto mc = movement_correlations(t, ConstantRowPolicy::skip);
        const auto links = strong_links(mc.corr, pos_thr, neg_thr);
        out.real_positive = static_cast<int>(links.positive.size());
        out.real_negative = static_cast<int>(links.negative.size());
    }
    std::size_t zero = 0;
    for (std::size_t r = 0; r < n_runs; ++r) {
        const std::uint64_t seed = base_seed + r;
        Rng rng(seed);
        const MlpTable shuffled = shuffle_mlp_table(t, axis, rng);
        const auto mc = movement_correlations(shuffled, ConstantRowPolicy::skip);
        const auto links = strong_links(mc.corr, pos_thr, neg_thr);
        RandomizationRun run;
        run.seed = seed;
        run.positive = static_cast<int>(links.positive.size());
        run.negative = static_cast<int>(links.negative.size());
        if (run.positive + run.negative == 0) ++zero;
        out.runs.push_back(run);
    }
    out.fraction_zero_strong = static_cast<double>(zero) / static_cast<double>(n_runs);
    return out;
}

} // namespace ecoclust
