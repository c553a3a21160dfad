#include "core/mamlp.hpp"

#include <algorithm>
#include <functional>

#include "core/errors.hpp"

namespace ecoclust {

Panel augment_average(const Panel& p, AvgMode mode) {
    if (p.entity_index(kAvgLabel) >= 0)
        throw input_error("panel already contains an entity named 'AVG'");
    if (p.n_entities() < 2)
        throw insufficient_error("average agent needs at least 2 entities");
    Panel out = p;
    const std::size_t L = p.common_years();
    std::vector<double> avg(L, 0.0);
    for (std::size_t t = 0; t < L; ++t) {
        double s = 0;
        for (const auto& v : p.values) s += v[t];
        avg[t] = mode == AvgMode::mean ? s / static_cast<double>(p.n_entities()) : s;
    }
    out.entities.push_back(kAvgLabel);
    out.values.push_back(std::move(avg));
    return out;
}

std::vector<double> mlp_distances(const LabeledMatrix& augmented_dist, MlpMode mode) {
    const int avg = augmented_dist.index_of(kAvgLabel);
    if (avg < 0) throw input_error("matrix has no 'AVG' entry");
    const std::size_t n = augmented_dist.n();
    if (n < 2) throw insufficient_error("mlp distances need at least one real entity");

    const Tree mst = build_mst(augmented_dist);
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : mst.edges) {
        adj[e.a].push_back({e.b, e.w});
        adj[e.b].push_back({e.a, e.w});
    }

    // One traversal from AVG covers every entity's path statistic.
    std::vector<double> stat(n, 0.0);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{static_cast<std::size_t>(avg)};
    seen[static_cast<std::size_t>(avg)] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (const auto& [y, w] : adj[x]) {
            if (seen[y]) continue;
            seen[y] = true;
            stat[y] = mode == MlpMode::max_edge ? std::max(stat[x], w) : stat[x] + w;
            stack.push_back(y);
        }
    }

    std::vector<double> out;
    out.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        if (i != static_cast<std::size_t>(avg)) out.push_back(stat[i]);
    return out;
}

MlpTable mlp_table(const Panel& p, std::size_t T, std::size_t step,
                   const MetricSpec& metric, MlpMode mode, AvgMode avg_mode) {
    const Panel aug = augment_average(p, avg_mode);
    const auto windows = make_windows(aug, T, step);

    MlpTable t;
    t.indicator = p.indicator;
    t.entities = p.entities;
    t.values.assign(p.n_entities(), std::vector<double>(windows.size(), 0.0));
    for (std::size_t w = 0; w < windows.size(); ++w) {
        t.window_labels.push_back(windows[w].label);
        const auto dm = distance_matrix(aug, windows[w], metric);
        const auto dhat = mlp_distances(dm.dist, mode);
        for (std::size_t e = 0; e < p.n_entities(); ++e) t.values[e][w] = dhat[e];
    }
    return t;
}

MovementCorrelations movement_correlations(const MlpTable& t, ConstantRowPolicy policy) {
    if (t.n_windows() < 3)
        throw insufficient_error("movement correlations need at least 3 windows, got " +
                                 std::to_string(t.n_windows()));
    if (t.n_entities() < 2)
        throw insufficient_error("movement correlations need at least 2 entities");

    MovementCorrelations out;
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < t.n_entities(); ++e) {
        const auto& row = t.values[e];
        bool constant = true;
        for (std::size_t w = 1; w < row.size(); ++w)
            if (row[w] != row[0]) {
                constant = false;
                break;
            }
        if (constant) {
            if (policy == ConstantRowPolicy::fail)
                throw degenerate_error("entity '" + t.entities[e] +
                                       "' has a constant dhat trajectory");
            out.excluded.push_back(t.entities[e]);
        } else {
            keep.push_back(e);
        }
    }
    if (keep.size() < 2)
        throw insufficient_error("fewer than 2 non-constant dhat trajectories remain");

    std::vector<std::string> labels;
    for (std::size_t e : keep) labels.push_back(t.entities[e]);
    out.corr = LabeledMatrix::zeros(std::move(labels));
    for (std::size_t i = 0; i < keep.size(); ++i) out.corr.at(i, i) = 1.0;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            const double c = pearson(t.values[keep[i]], t.values[keep[j]]);
            out.corr.at(i, j) = out.corr.at(j, i) = c;
        }
    return out;
}

StrongLinks strong_links(const LabeledMatrix& corr, double pos_thr, double neg_thr) {
    if (pos_thr <= neg_thr)
        throw input_error("positive threshold must exceed the negative threshold");
    StrongLinks out;
    const std::size_t n = corr.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = corr.at(i, j);
            std::string a = corr.labels[i], b = corr.labels[j];
            if (a > b) std::swap(a, b);
            if (c >= pos_thr)
                out.positive.push_back({std::move(a), std::move(b), c});
            else if (c <= neg_thr)
                out.negative.push_back({std::move(a), std::move(b), c});
        }
    auto by_pair = [](const StrongLink& x, const StrongLink& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    };
    std::sort(out.positive.begin(), out.positive.end(), by_pair);
    std::sort(out.negative.begin(), out.negative.end(), by_pair);
    return out;
}

ClusterPartition cluster_partition(const LabeledMatrix& corr, double pos_thr, double neg_thr) {
    const StrongLinks links = strong_links(corr, pos_thr, neg_thr);
    const std::size_t n = corr.n();

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<bool> has_pos(n, false), has_neg(n, false);
    for (const auto& l : links.positive) {
        const std::size_t i = static_cast<std::size_t>(corr.index_of(l.a));
        const std::size_t j = static_cast<std::size_t>(corr.index_of(l.b));
        has_pos[i] = has_pos[j] = true;
        parent[find(i)] = find(j);
    }
    for (const auto& l : links.negative) {
        has_neg[static_cast<std::size_t>(corr.index_of(l.a))] = true;
        has_neg[static_cast<std::size_t>(corr.index_of(l.b))] = true;
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return corr.labels[a] < corr.labels[b]; });

    ClusterPartition out;
    std::vector<int> group_of(n, -1);
    for (std::size_t idx : order) {
        if (has_pos[idx]) {
            const std::size_t r = find(idx);
            if (group_of[r] < 0) {
                group_of[r] = static_cast<int>(out.clusters.size());
                out.clusters.emplace_back();
            }
            out.clusters[static_cast<std::size_t>(group_of[r])].push_back(corr.labels[idx]);
        } else if (has_neg[idx]) {
            out.outliers.push_back(corr.labels[idx]);
        } else {
            out.unclustered.push_back(corr.labels[idx]);
        }
    }
    return out;
}

std::vector<SensitivityEntry> sensitivity(const LabeledMatrix& corr) {
    const std::size_t n = corr.n();
    if (n < 2) throw insufficient_error("sensitivity needs at least 2 entities");
    std::vector<SensitivityEntry> out;
    for (std::size_t i = 0; i < n; ++i) {
        double chi = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) chi += corr.at(i, j) * corr.at(i, j);
        out.push_back({corr.labels[i], chi});
    }
    std::sort(out.begin(), out.end(), [](const SensitivityEntry& a, const SensitivityEntry& b) {
        if (a.chi != b.chi) return a.chi > b.chi;
        return a.entity < b.entity;
    });
    return out;
}

} // namespace ecoclust
