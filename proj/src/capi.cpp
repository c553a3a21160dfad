#include "ecoclust.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/errors.hpp"
#include "core/factorgraph.hpp"
#include "core/hierarchy.hpp"
#include "core/io.hpp"
#include "core/mamlp.hpp"
#include "core/metrics.hpp"
#include "core/panel.hpp"
#include "core/robustness.hpp"
#include "core/trendstats.hpp"

using namespace ecoclust;

struct ecl_panel {
    Panel p;
};
struct ecl_matrix {
    LabeledMatrix m;
};
struct ecl_tree {
    Tree t;
};
struct ecl_mlp_table {
    MlpTable t;
};
struct ecl_trend {
    std::vector<TrendPoint> points;
    std::optional<std::vector<std::pair<double, double>>> cis;
};
struct ecl_factor_graph {
    FactorGraph g;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Exceptions stop at this boundary; the code mirrors the error taxonomy.
template <typename F>
int guard(F&& f) noexcept {
    try {
        f();
        return 0;
    } catch (const Error& e) {
        set_error(e.what());
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        set_error(e.what());
        return 1;
    } catch (...) {
        set_error("unknown internal failure");
        return 1;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool cond, const char* msg) {
    if (cond) return 0;
    set_error(msg);
    return 2;
}

TreeKind parse_tree_kind(const std::string& kind) {
    if (kind == "mst") return TreeKind::mst;
    if (kind == "lmst") return TreeKind::lmst;
    if (kind == "umlp") return TreeKind::chain_uni;
    if (kind == "bmlp") return TreeKind::chain_bi;
    throw input_error("unknown tree kind '" + kind + "'");
}

MlpMode parse_mlp_mode(const std::string& mode) {
    if (mode == "max-edge") return MlpMode::max_edge;
    if (mode == "path-sum") return MlpMode::path_sum;
    throw input_error("unknown mlp mode '" + mode + "'");
}

ShuffleAxis parse_axis(const std::string& axis) {
    if (axis == "columns") return ShuffleAxis::columns;
    if (axis == "rows") return ShuffleAxis::rows;
    if (axis == "both") return ShuffleAxis::both;
    throw input_error("unknown shuffle axis '" + axis + "'");
}

Window window_at(const Panel& p, std::size_t start, std::size_t length) {
    Window w;
    w.start = start;
    w.length = length;
    if (length < 2 || start + length > p.common_years())
        throw insufficient_error("window does not fit the common year range");
    w.start_year = p.years[start];
    w.end_year = p.years[start + length - 1];
    w.label = window_label(w.start_year, w.end_year);
    return w;
}

} // namespace

extern "C" {

const char* ecl_version(void) { return "1.0.0"; }

const char* ecl_last_error(void) { return g_last_error.c_str(); }

void ecl_string_free(char* s) { delete[] s; }

/* ---- panels ------------------------------------------------------------ */

int ecl_panel_load(const char* path, int kind, const char* indicator, ecl_panel** out) {
    if (int rc = require(path && indicator && out, "null argument")) return rc;
    return guard([&] {
        auto p = load_panel(path, kind == 1 ? PanelKind::levels : PanelKind::growth_rates,
                            indicator);
        *out = new ecl_panel{std::move(p)};
    });
}

int ecl_panel_parse(const char* csv_text, const char* source_name, int kind,
                    const char* indicator, ecl_panel** out) {
    if (int rc = require(csv_text && source_name && indicator && out, "null argument"))
        return rc;
    return guard([&] {
        auto p = parse_panel(csv_text, source_name,
                             kind == 1 ? PanelKind::levels : PanelKind::growth_rates,
                             indicator);
        *out = new ecl_panel{std::move(p)};
    });
}

int ecl_panel_to_growth(const ecl_panel* p, int method, ecl_panel** out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guard([&] {
        auto g = to_growth_rates(p->p, method == 1 ? GrowthMethod::log_diff
                                                   : GrowthMethod::pct_change);
        *out = new ecl_panel{std::move(g)};
    });
}

int ecl_panel_write_csv(const ecl_panel* p, const char* path) {
    if (int rc = require(p && path, "null argument")) return rc;
    return guard([&] { write_file(path, panel_to_csv(p->p)); });
}

void ecl_panel_free(ecl_panel* p) { delete p; }

size_t ecl_panel_n_entities(const ecl_panel* p) { return p ? p->p.n_entities() : 0; }

const char* ecl_panel_entity(const ecl_panel* p, size_t i) {
    if (!p || i >= p->p.n_entities()) return nullptr;
    return p->p.entities[i].c_str();
}

size_t ecl_panel_n_years(const ecl_panel* p) { return p ? p->p.years.size() : 0; }

int ecl_panel_year(const ecl_panel* p, size_t i) {
    if (!p || i >= p->p.years.size()) return 0;
    return p->p.years[i];
}

int ecl_panel_window_count(const ecl_panel* p, size_t T, size_t step, size_t* out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guard([&] { *out = make_windows(p->p, T, step).size(); });
}

int ecl_panel_window(const ecl_panel* p, size_t T, size_t step, size_t index,
                     size_t* start, size_t* length, int* start_year, int* end_year) {
    if (int rc = require(p && start && length && start_year && end_year, "null argument"))
        return rc;
    return guard([&] {
        const auto ws = make_windows(p->p, T, step);
        if (index >= ws.size())
            throw input_error("window index " + std::to_string(index) + " out of range");
        *start = ws[index].start;
        *length = ws[index].length;
        *start_year = ws[index].start_year;
        *end_year = ws[index].end_year;
    });
}

/* ---- matrices ---------------------------------------------------------- */

namespace {

int matrix_pair_out(DistanceResult&& r, ecl_matrix** dist_out, ecl_matrix** corr_out) {
    *dist_out = new ecl_matrix{std::move(r.dist)};
    if (corr_out) {
        *corr_out = r.corr ? new ecl_matrix{std::move(*r.corr)} : nullptr;
    }
    return 0;
}

} // namespace

int ecl_distance_matrix(const ecl_panel* p, size_t win_start, size_t win_length,
                        const char* metric, ecl_matrix** dist_out, ecl_matrix** corr_out) {
    if (int rc = require(p && metric && dist_out, "null argument")) return rc;
    return guard([&] {
        const auto spec = parse_metric(metric);
        auto r = distance_matrix(p->p, window_at(p->p, win_start, win_length), spec);
        matrix_pair_out(std::move(r), dist_out, corr_out);
    });
}

int ecl_augmented_matrix(const ecl_panel* p, size_t win_start, size_t win_length,
                         const char* metric, ecl_matrix** dist_out, ecl_matrix** corr_out) {
    if (int rc = require(p && metric && dist_out, "null argument")) return rc;
    return guard([&] {
        const auto spec = parse_metric(metric);
        const Panel aug = augment_average(p->p);
        auto r = distance_matrix(aug, window_at(aug, win_start, win_length), spec);
        matrix_pair_out(std::move(r), dist_out, corr_out);
    });
}

int ecl_matrix_from_csv(const char* path, ecl_matrix** out) {
    if (int rc = require(path && out, "null argument")) return rc;
    return guard([&] { *out = new ecl_matrix{load_matrix_csv(path)}; });
}

int ecl_matrix_write_csv(const ecl_matrix* m, const char* path) {
    if (int rc = require(m && path, "null argument")) return rc;
    return guard([&] { write_file(path, matrix_to_csv(m->m)); });
}

void ecl_matrix_free(ecl_matrix* m) { delete m; }

size_t ecl_matrix_n(const ecl_matrix* m) { return m ? m->m.n() : 0; }

const char* ecl_matrix_label(const ecl_matrix* m, size_t i) {
    if (!m || i >= m->m.n()) return nullptr;
    return m->m.labels[i].c_str();
}

double ecl_matrix_get(const ecl_matrix* m, size_t i, size_t j) {
    if (!m || i >= m->m.n() || j >= m->m.n()) return 0.0;
    return m->m.at(i, j);
}

int ecl_matrix_moments(const ecl_matrix* m, ecl_moments* out) {
    if (int rc = require(m && out, "null argument")) return rc;
    return guard([&] {
        const auto mm = matrix_moments(m->m);
        out->mean = mm.mean;
        out->variance = mm.variance;
        out->sigma = mm.sigma;
        out->skewness = mm.skewness;
        out->kurtosis_raw = mm.kurtosis_raw;
        out->kurtosis_excess = mm.kurtosis_excess;
    });
}

/* ---- hierarchies ------------------------------------------------------- */

int ecl_tree_build(const ecl_matrix* dist, const char* kind, const char* root,
                   ecl_tree** out) {
    if (int rc = require(dist && kind && out, "null argument")) return rc;
    return guard([&] {
        const TreeKind k = parse_tree_kind(kind);
        Tree t;
        switch (k) {
        case TreeKind::mst:
            t = build_mst(dist->m);
            break;
        case TreeKind::lmst:
            t = build_lmst(dist->m);
            break;
        default:
            t = build_chain(dist->m, k, root ? root : "min-pair");
            break;
        }
        *out = new ecl_tree{std::move(t)};
    });
}

int ecl_tree_ultrametric(const ecl_tree* t, ecl_matrix** out) {
    if (int rc = require(t && out, "null argument")) return rc;
    return guard([&] { *out = new ecl_matrix{subdominant_ultrametric(t->t)}; });
}

int ecl_tree_clusters_json(const ecl_tree* t, double d_star, char** out_json) {
    if (int rc = require(t && out_json, "null argument")) return rc;
    return guard([&] {
        nlohmann::ordered_json j = threshold_clusters(t->t, d_star);
        *out_json = copy_string(j.dump(2) + "\n");
    });
}

int ecl_tree_write_dot(const ecl_tree* t, const char* path) {
    if (int rc = require(t && path, "null argument")) return rc;
    return guard([&] { write_file(path, export_dot(t->t)); });
}

int ecl_tree_dot(const ecl_tree* t, char** out_dot) {
    if (int rc = require(t && out_dot, "null argument")) return rc;
    return guard([&] { *out_dot = copy_string(export_dot(t->t)); });
}

void ecl_tree_free(ecl_tree* t) { delete t; }

size_t ecl_tree_n_nodes(const ecl_tree* t) { return t ? t->t.nodes.size() : 0; }

const char* ecl_tree_node(const ecl_tree* t, size_t i) {
    if (!t || i >= t->t.nodes.size()) return nullptr;
    return t->t.nodes[i].c_str();
}

size_t ecl_tree_n_edges(const ecl_tree* t) { return t ? t->t.edges.size() : 0; }

int ecl_tree_edge(const ecl_tree* t, size_t i, size_t* a, size_t* b, double* w) {
    if (int rc = require(t && a && b && w, "null argument")) return rc;
    return guard([&] {
        if (i >= t->t.edges.size())
            throw input_error("edge index " + std::to_string(i) + " out of range");
        *a = t->t.edges[i].a;
        *b = t->t.edges[i].b;
        *w = t->t.edges[i].w;
    });
}

/* ---- average-agent MLP ------------------------------------------------- */

int ecl_mlp_distances(const ecl_matrix* augmented_dist, const char* mode, double* buf) {
    if (int rc = require(augmented_dist && mode && buf, "null argument")) return rc;
    return guard([&] {
        const auto d = mlp_distances(augmented_dist->m, parse_mlp_mode(mode));
        for (std::size_t i = 0; i < d.size(); ++i) buf[i] = d[i];
    });
}

int ecl_mlp_table_build(const ecl_panel* p, size_t T, size_t step, const char* metric,
                        const char* mode, ecl_mlp_table** out) {
    if (int rc = require(p && metric && mode && out, "null argument")) return rc;
    return guard([&] {
        auto t = mlp_table(p->p, T, step, parse_metric(metric), parse_mlp_mode(mode));
        *out = new ecl_mlp_table{std::move(t)};
    });
}

int ecl_mlp_table_from_csv(const char* path, const char* indicator, ecl_mlp_table** out) {
    if (int rc = require(path && indicator && out, "null argument")) return rc;
    return guard([&] { *out = new ecl_mlp_table{load_mlp_table_csv(path, indicator)}; });
}

int ecl_mlp_table_write_csv(const ecl_mlp_table* t, const char* path) {
    if (int rc = require(t && path, "null argument")) return rc;
    return guard([&] { write_file(path, mlp_table_to_csv(t->t)); });
}

void ecl_mlp_table_free(ecl_mlp_table* t) { delete t; }

size_t ecl_mlp_table_n_entities(const ecl_mlp_table* t) {
    return t ? t->t.n_entities() : 0;
}

const char* ecl_mlp_table_entity(const ecl_mlp_table* t, size_t i) {
    if (!t || i >= t->t.n_entities()) return nullptr;
    return t->t.entities[i].c_str();
}

size_t ecl_mlp_table_n_windows(const ecl_mlp_table* t) {
    return t ? t->t.n_windows() : 0;
}

const char* ecl_mlp_table_window(const ecl_mlp_table* t, size_t i) {
    if (!t || i >= t->t.n_windows()) return nullptr;
    return t->t.window_labels[i].c_str();
}

double ecl_mlp_table_value(const ecl_mlp_table* t, size_t entity, size_t window) {
    if (!t || entity >= t->t.n_entities() || window >= t->t.n_windows()) return 0.0;
    return t->t.values[entity][window];
}

int ecl_movement_correlations(const ecl_mlp_table* t, int skip_constant,
                              ecl_matrix** corr_out, char** excluded_json) {
    if (int rc = require(t && corr_out, "null argument")) return rc;
    return guard([&] {
        auto mc = movement_correlations(t->t, skip_constant ? ConstantRowPolicy::skip
                                                            : ConstantRowPolicy::fail);
        *corr_out = new ecl_matrix{std::move(mc.corr)};
        if (excluded_json) {
            nlohmann::ordered_json j = mc.excluded;
            *excluded_json = copy_string(j.dump() + "\n");
        }
    });
}

int ecl_sensitivity(const ecl_matrix* corr, double* buf) {
    if (int rc = require(corr && buf, "null argument")) return rc;
    return guard([&] {
        const auto s = sensitivity(corr->m);
        for (const auto& e : s) {
            const int i = corr->m.index_of(e.entity);
            buf[i] = e.chi;
        }
    });
}

int ecl_cluster_report_json(const ecl_matrix* corr, double pos_thr, double neg_thr,
                            const char* indicator, char** out_json) {
    if (int rc = require(corr && indicator && out_json, "null argument")) return rc;
    return guard([&] {
        const auto part = cluster_partition(corr->m, pos_thr, neg_thr);
        const auto sens = sensitivity(corr->m);
        *out_json = copy_string(
            cluster_report_json(indicator, pos_thr, neg_thr, part, sens, {}));
    });
}

/* ---- trend statistics -------------------------------------------------- */

int ecl_trend_compute(const ecl_panel* p, size_t T, size_t step, const char* metric,
                      int with_ci, double level, size_t resamples, uint64_t seed,
                      ecl_trend** out) {
    if (int rc = require(p && metric && out, "null argument")) return rc;
    return guard([&] {
        const auto spec = parse_metric(metric);
        auto points = trend_series(p->p, T, step, spec);
        auto handle = new ecl_trend{std::move(points), std::nullopt};
        if (with_ci) {
            try {
                const auto windows = make_windows(p->p, T, step);
                std::vector<std::pair<double, double>> cis;
                for (std::size_t w = 0; w < windows.size(); ++w) {
                    const auto dm = distance_matrix(p->p, windows[w], spec);
                    const auto pairs = upper_triangle(dm.dist);
                    // Window w draws from stream seed + w; reruns match.
                    const auto ci = bootstrap_ci(pairs, level, resamples, seed + w);
                    cis.push_back({ci.std_mean_lo, ci.std_mean_hi});
                }
                handle->cis = std::move(cis);
            } catch (...) {
                delete handle;
                throw;
            }
        }
        *out = handle;
    });
}

int ecl_trend_write_csv(const ecl_trend* t, const char* path) {
    if (int rc = require(t && path, "null argument")) return rc;
    return guard([&] {
        write_file(path, trend_to_csv(t->points, t->cis ? &*t->cis : nullptr));
    });
}

void ecl_trend_free(ecl_trend* t) { delete t; }

size_t ecl_trend_n(const ecl_trend* t) { return t ? t->points.size() : 0; }

const char* ecl_trend_label(const ecl_trend* t, size_t i) {
    if (!t || i >= t->points.size()) return nullptr;
    return t->points[i].label.c_str();
}

double ecl_trend_value(const ecl_trend* t, size_t i) {
    if (!t || i >= t->points.size()) return 0.0;
    return t->points[i].value;
}

int ecl_trend_ci(const ecl_trend* t, size_t i, double* lo, double* hi) {
    if (int rc = require(t && lo && hi, "null argument")) return rc;
    return guard([&] {
        if (i >= t->points.size())
            throw input_error("trend index " + std::to_string(i) + " out of range");
        if (!t->cis) throw input_error("trend was computed without intervals");
        *lo = (*t->cis)[i].first;
        *hi = (*t->cis)[i].second;
    });
}

int ecl_fit_exp_decay(const double* values, size_t n, ecl_fit_result* out) {
    if (int rc = require(values && out, "null argument")) return rc;
    return guard([&] {
        const auto fit = fit_exp_decay(std::vector<double>(values, values + n));
        out->amplitude = fit.amplitude;
        out->tau = fit.tau;
        out->r_squared = fit.r_squared;
        out->decaying = fit.decaying ? 1 : 0;
        out->points = fit.points;
    });
}

int ecl_fit_exp_decay_json(const double* values, size_t n, double step_years,
                           char** out_json) {
    if (int rc = require(values && out_json, "null argument")) return rc;
    return guard([&] {
        const auto fit = fit_exp_decay(std::vector<double>(values, values + n));
        *out_json = copy_string(fit_to_json(fit, step_years));
    });
}

int ecl_moving_average(const double* values, size_t n, size_t k, double* out) {
    if (int rc = require(values && out, "null argument")) return rc;
    return guard([&] {
        const auto ma = moving_average(std::vector<double>(values, values + n), k);
        for (std::size_t i = 0; i < ma.size(); ++i) out[i] = ma[i];
    });
}

int ecl_bootstrap_ci(const double* values, size_t n, double level, size_t resamples,
                     uint64_t seed, ecl_ci_result* out) {
    if (int rc = require(values && out, "null argument")) return rc;
    return guard([&] {
        const auto ci =
            bootstrap_ci(std::vector<double>(values, values + n), level, resamples, seed);
        out->mean = ci.mean;
        out->mean_lo = ci.mean_lo;
        out->mean_hi = ci.mean_hi;
        out->sigma = ci.sigma;
        out->sigma_lo = ci.sigma_lo;
        out->sigma_hi = ci.sigma_hi;
        out->std_mean = ci.std_mean;
        out->std_mean_lo = ci.std_mean_lo;
        out->std_mean_hi = ci.std_mean_hi;
    });
}

int ecl_sigma_convergence(const ecl_panel* levels, int year, int span, int* verdict,
                          double* var_start, double* var_end) {
    if (int rc = require(levels && verdict && var_start && var_end, "null argument"))
        return rc;
    return guard([&] {
        const auto r = sigma_convergence(levels->p, year, span);
        *verdict = r.verdict == SigmaVerdict::converging   ? 0
                   : r.verdict == SigmaVerdict::diverging ? 1
                                                          : 2;
        *var_start = r.var_start;
        *var_end = r.var_end;
    });
}

/* ---- robustness -------------------------------------------------------- */

int ecl_shuffle_stack_csv(const ecl_panel* p, size_t T, size_t step, const char* metric,
                          size_t n_seeds, uint64_t base_seed, const char* path) {
    if (int rc = require(p && metric && path, "null argument")) return rc;
    return guard([&] {
        if (n_seeds < 1) throw input_error("shuffle sweep needs at least 1 seed");
        const auto stack = distance_stack(p->p, T, step, parse_metric(metric));
        std::vector<ShuffleCsvRow> rows;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            const auto rep = stack_shuffle_report(stack, base_seed + s);
            ShuffleCsvRow row;
            row.seed = rep.seed;
            row.mode = "stack";
            row.amplitude = rep.shuffled_amplitude;
            row.ratio = rep.ratio;
            rows.push_back(std::move(row));
        }
        write_file(path, shuffle_rows_to_csv(rows));
    });
}

int ecl_shuffle_mlp_table(const ecl_mlp_table* t, const char* axis, uint64_t seed,
                          ecl_mlp_table** out) {
    if (int rc = require(t && axis && out, "null argument")) return rc;
    return guard([&] {
        Rng rng(seed);
        auto shuffled = shuffle_mlp_table(t->t, parse_axis(axis), rng);
        *out = new ecl_mlp_table{std::move(shuffled)};
    });
}

int ecl_shuffle_mlp_csv(const ecl_mlp_table* t, const char* axis, size_t n_seeds,
                        uint64_t base_seed, double pos_thr, double neg_thr,
                        const char* path) {
    if (int rc = require(t && axis && path, "null argument")) return rc;
    return guard([&] {
        if (n_seeds < 1) throw input_error("shuffle sweep needs at least 1 seed");
        const ShuffleAxis ax = parse_axis(axis);
        const std::string mode = std::string("mlp-") + axis;
        std::vector<ShuffleCsvRow> rows;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            const auto rep = mlp_shuffle_report(t->t, ax, base_seed + s, pos_thr, neg_thr);
            ShuffleCsvRow row;
            row.seed = rep.seed;
            row.mode = mode;
            row.c_max = rep.c_max;
            row.c_min = rep.c_min;
            row.strong_links = rep.strong_links;
            rows.push_back(std::move(row));
        }
        write_file(path, shuffle_rows_to_csv(rows));
    });
}

int ecl_randomization_summary_json(const ecl_mlp_table* t, const char* axis,
                                   size_t n_runs, uint64_t base_seed, double pos_thr,
                                   double neg_thr, char** out_json) {
    if (int rc = require(t && axis && out_json, "null argument")) return rc;
    return guard([&] {
        const auto s = randomization_summary(t->t, parse_axis(axis), n_runs, base_seed,
                                             pos_thr, neg_thr);
        *out_json = copy_string(randomization_summary_to_json(s, axis));
    });
}

/* ---- factor graph ------------------------------------------------------ */

int ecl_factor_graph_build(const char* const* indicator_labels,
                           const ecl_matrix* const* correlations, size_t k,
                           double threshold, ecl_factor_graph** out) {
    if (int rc = require(indicator_labels && correlations && out, "null argument"))
        return rc;
    return guard([&] {
        std::vector<std::string> labels;
        std::vector<LabeledMatrix> mats;
        for (std::size_t i = 0; i < k; ++i) {
            if (!indicator_labels[i] || !correlations[i])
                throw input_error("null indicator or matrix");
            labels.push_back(indicator_labels[i]);
            mats.push_back(correlations[i]->m);
        }
        *out = new ecl_factor_graph{build_factor_graph(labels, mats, threshold)};
    });
}

int ecl_factor_graph_json(const ecl_factor_graph* g, char** out_json) {
    if (int rc = require(g && out_json, "null argument")) return rc;
    return guard([&] { *out_json = copy_string(factor_graph_to_json(g->g)); });
}

int ecl_factor_graph_clusters_csv(const ecl_factor_graph* g, const char* subsets,
                                  const char* path) {
    if (int rc = require(g && path, "null argument")) return rc;
    return guard([&] {
        std::vector<std::vector<std::string>> groups;
        if (!subsets) {
            groups = leave_one_out_subsets(g->g);
        } else {
            std::string cur;
            std::vector<std::string> group;
            const std::string text = std::string(subsets) + ";";
            for (char c : text) {
                if (c == ' ' || c == ';') {
                    if (!cur.empty()) {
                        group.push_back(cur);
                        cur.clear();
                    }
                    if (c == ';') {
                        if (group.empty()) throw input_error("empty indicator subset");
                        groups.push_back(group);
                        group.clear();
                    }
                } else {
                    cur += c;
                }
            }
        }
        write_file(path, cluster_rows_to_csv(enumerate_clusters(g->g, groups)));
    });
}

void ecl_factor_graph_free(ecl_factor_graph* g) { delete g; }

int ecl_entropy(double p, double* out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guard([&] { *out = cluster_entropy(p); });
}

} // extern "C"
