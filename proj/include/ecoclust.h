/* ecoclust: convergence and cluster structure of macroeconomic panels.
 *
 * C surface over the analysis core. Every function returns an error code:
 *   0  success
 *   2  malformed input or configuration
 *   3  degenerate data (constant series, zero dispersion, domain violation)
 *   4  insufficient data (too few years, windows or points)
 * On failure ecl_last_error() describes the problem (thread-local buffer,
 * valid until the next failing call on the same thread). Out-parameters are
 * untouched on failure.
 *
 * Handles are opaque; release them with the matching *_free function.
 * Strings returned through char** out-parameters belong to the caller and
 * must be released with ecl_string_free.
 */

#ifndef ECOCLUST_H
#define ECOCLUST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ecl_panel ecl_panel;
typedef struct ecl_matrix ecl_matrix;
typedef struct ecl_tree ecl_tree;
typedef struct ecl_mlp_table ecl_mlp_table;
typedef struct ecl_trend ecl_trend;
typedef struct ecl_factor_graph ecl_factor_graph;

const char* ecl_version(void);
const char* ecl_last_error(void);
void ecl_string_free(char* s);

/* ---- panels ------------------------------------------------------------ */

/* kind: 0 = growth rates, 1 = levels. */
int ecl_panel_load(const char* path, int kind, const char* indicator, ecl_panel** out);
int ecl_panel_parse(const char* csv_text, const char* source_name, int kind,
                    const char* indicator, ecl_panel** out);
/* method: 0 = pct-change, 1 = log-diff. */
int ecl_panel_to_growth(const ecl_panel* p, int method, ecl_panel** out);
int ecl_panel_write_csv(const ecl_panel* p, const char* path);
void ecl_panel_free(ecl_panel* p);

size_t ecl_panel_n_entities(const ecl_panel* p);
const char* ecl_panel_entity(const ecl_panel* p, size_t i);
size_t ecl_panel_n_years(const ecl_panel* p);
int ecl_panel_year(const ecl_panel* p, size_t i);

/* Rolling windows of nominal length T advancing by step. */
int ecl_panel_window_count(const ecl_panel* p, size_t T, size_t step, size_t* out);
int ecl_panel_window(const ecl_panel* p, size_t T, size_t step, size_t index,
                     size_t* start, size_t* length, int* start_year, int* end_year);

/* ---- distance and correlation matrices --------------------------------- */

/* metric: "statistical", "euclidean" or "minkowski:<p>:<r>". corr_out may be
 * NULL; it is populated only for the statistical metric. */
int ecl_distance_matrix(const ecl_panel* p, size_t win_start, size_t win_length,
                        const char* metric, ecl_matrix** dist_out, ecl_matrix** corr_out);
/* Distances over the panel plus the synthetic average agent "AVG". */
int ecl_augmented_matrix(const ecl_panel* p, size_t win_start, size_t win_length,
                         const char* metric, ecl_matrix** dist_out, ecl_matrix** corr_out);

int ecl_matrix_from_csv(const char* path, ecl_matrix** out);
int ecl_matrix_write_csv(const ecl_matrix* m, const char* path);
void ecl_matrix_free(ecl_matrix* m);

size_t ecl_matrix_n(const ecl_matrix* m);
const char* ecl_matrix_label(const ecl_matrix* m, size_t i);
double ecl_matrix_get(const ecl_matrix* m, size_t i, size_t j);

typedef struct ecl_moments {
    double mean;
    double variance;
    double sigma;
    double skewness;
    double kurtosis_raw;    /* m4 / sigma^4 */
    double kurtosis_excess; /* kurtosis_raw - 3 */
} ecl_moments;

/* Moments of the distinct-pair value multiset (population denominators). */
int ecl_matrix_moments(const ecl_matrix* m, ecl_moments* out);

/* ---- hierarchies ------------------------------------------------------- */

/* kind: "mst", "lmst", "umlp" or "bmlp". root names the chain seed entity,
 * or "min-pair" (the default when NULL) to seed with the closest pair. */
int ecl_tree_build(const ecl_matrix* dist, const char* kind, const char* root,
                   ecl_tree** out);
int ecl_tree_ultrametric(const ecl_tree* t, ecl_matrix** out);
/* JSON array of components after removing edges heavier than d_star. */
int ecl_tree_clusters_json(const ecl_tree* t, double d_star, char** out_json);
int ecl_tree_write_dot(const ecl_tree* t, const char* path);
int ecl_tree_dot(const ecl_tree* t, char** out_dot);
void ecl_tree_free(ecl_tree* t);

size_t ecl_tree_n_nodes(const ecl_tree* t);
const char* ecl_tree_node(const ecl_tree* t, size_t i);
size_t ecl_tree_n_edges(const ecl_tree* t);
int ecl_tree_edge(const ecl_tree* t, size_t i, size_t* a, size_t* b, double* w);

/* ---- average-agent MLP ------------------------------------------------- */

/* mode: "max-edge" or "path-sum". Distances of each entity to "AVG" along
 * the minimum spanning tree of an augmented matrix; buf needs room for
 * every non-AVG label, in matrix order. */
int ecl_mlp_distances(const ecl_matrix* augmented_dist, const char* mode, double* buf);

int ecl_mlp_table_build(const ecl_panel* p, size_t T, size_t step, const char* metric,
                        const char* mode, ecl_mlp_table** out);
int ecl_mlp_table_from_csv(const char* path, const char* indicator, ecl_mlp_table** out);
int ecl_mlp_table_write_csv(const ecl_mlp_table* t, const char* path);
void ecl_mlp_table_free(ecl_mlp_table* t);

size_t ecl_mlp_table_n_entities(const ecl_mlp_table* t);
const char* ecl_mlp_table_entity(const ecl_mlp_table* t, size_t i);
size_t ecl_mlp_table_n_windows(const ecl_mlp_table* t);
const char* ecl_mlp_table_window(const ecl_mlp_table* t, size_t i);
double ecl_mlp_table_value(const ecl_mlp_table* t, size_t entity, size_t window);

/* Pearson correlations between entity dhat rows. skip_constant 0 fails on a
 * constant row, 1 excludes it; excluded_json (may be NULL) then receives a
 * JSON array of the dropped entities. */
int ecl_movement_correlations(const ecl_mlp_table* t, int skip_constant,
                              ecl_matrix** corr_out, char** excluded_json);

/* chi_i = sum of squared off-diagonal correlations, in matrix label order. */
int ecl_sensitivity(const ecl_matrix* corr, double* buf);

/* Strong links and the induced partition, as a JSON report. */
int ecl_cluster_report_json(const ecl_matrix* corr, double pos_thr, double neg_thr,
                            const char* indicator, char** out_json);

/* ---- trend statistics -------------------------------------------------- */

/* Standardized mean distance per window. with_ci != 0 adds a percentile
 * bootstrap interval per window (level in (0,1), resamples >= 100). */
int ecl_trend_compute(const ecl_panel* p, size_t T, size_t step, const char* metric,
                      int with_ci, double level, size_t resamples, uint64_t seed,
                      ecl_trend** out);
int ecl_trend_write_csv(const ecl_trend* t, const char* path);
void ecl_trend_free(ecl_trend* t);

size_t ecl_trend_n(const ecl_trend* t);
const char* ecl_trend_label(const ecl_trend* t, size_t i);
double ecl_trend_value(const ecl_trend* t, size_t i);
int ecl_trend_ci(const ecl_trend* t, size_t i, double* lo, double* hi);

typedef struct ecl_fit_result {
    double amplitude;
    double tau;       /* +inf when not decaying */
    double r_squared; /* original scale */
    int decaying;
    int points;
} ecl_fit_result;

/* y = A exp(-x / tau) by least squares on the log scale, x = 1-based index. */
int ecl_fit_exp_decay(const double* values, size_t n, ecl_fit_result* out);
int ecl_fit_exp_decay_json(const double* values, size_t n, double step_years,
                           char** out_json);

/* Trailing moving average of order k; out receives n - k + 1 values. */
int ecl_moving_average(const double* values, size_t n, size_t k, double* out);

typedef struct ecl_ci_result {
    double mean, mean_lo, mean_hi;
    double sigma, sigma_lo, sigma_hi;
    double std_mean, std_mean_lo, std_mean_hi;
} ecl_ci_result;

int ecl_bootstrap_ci(const double* values, size_t n, double level, size_t resamples,
                     uint64_t seed, ecl_ci_result* out);

/* Cross-entity variance of ln(levels) at `year` vs `year + span`.
 * verdict: 0 converging, 1 diverging, 2 neither. */
int ecl_sigma_convergence(const ecl_panel* levels, int year, int span, int* verdict,
                          double* var_start, double* var_end);

/* ---- robustness -------------------------------------------------------- */

/* Per-seed shuffle sweep over the windowed distance matrices; writes the
 * report CSV (seeds base_seed .. base_seed + n_seeds - 1). */
int ecl_shuffle_stack_csv(const ecl_panel* p, size_t T, size_t step, const char* metric,
                          size_t n_seeds, uint64_t base_seed, const char* path);

/* axis: "columns", "rows" or "both" (rows first, then columns). */
int ecl_shuffle_mlp_table(const ecl_mlp_table* t, const char* axis, uint64_t seed,
                          ecl_mlp_table** out);
int ecl_shuffle_mlp_csv(const ecl_mlp_table* t, const char* axis, size_t n_seeds,
                        uint64_t base_seed, double pos_thr, double neg_thr,
                        const char* path);
int ecl_randomization_summary_json(const ecl_mlp_table* t, const char* axis,
                                   size_t n_runs, uint64_t base_seed, double pos_thr,
                                   double neg_thr, char** out_json);

/* ---- factor graph ------------------------------------------------------ */

/* k correlation matrices over one entity set; an entity attaches to an
 * indicator when some off-diagonal |c| reaches the threshold. */
int ecl_factor_graph_build(const char* const* indicator_labels,
                           const ecl_matrix* const* correlations, size_t k,
                           double threshold, ecl_factor_graph** out);
int ecl_factor_graph_json(const ecl_factor_graph* g, char** out_json);
/* subsets: ";"-separated groups of space-separated indicator labels, e.g.
 * "s1 s2 s3;s2 s3 s4". NULL enumerates the leave-one-out subsets. */
int ecl_factor_graph_clusters_csv(const ecl_factor_graph* g, const char* subsets,
                                  const char* path);
void ecl_factor_graph_free(ecl_factor_graph* g);

/* -p ln p; p must lie in [0, 1]. */
int ecl_entropy(double p, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ECOCLUST_H */
