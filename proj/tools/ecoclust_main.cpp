// ecoclust command line tool. Talks to the library exclusively through the
// C API; everything here is argument plumbing and file naming.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecoclust.h"

namespace fs = std::filesystem;

namespace {

int fail(int rc) {
    std::cerr << "error: " << ecl_last_error() << "\n";
    return rc;
}

int fail_msg(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::string file_stem(const std::string& path) {
    return fs::path(path).stem().string();
}

std::string join_out(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

bool ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    return !ec;
}

void note_written(const std::string& path) { std::cout << "wrote " << path << "\n"; }

int write_text(const std::string& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail_msg("cannot write '" + path + "'");
    out << text;
    if (!out) return fail_msg("write failed for '" + path + "'");
    note_written(path);
    return 0;
}

// Shared options; each subcommand registers the subset it understands.
struct Options {
    std::string input;
    std::string out_dir = ".";
    std::string indicator;
    std::string metric = "statistical";
    std::string mlp_mode = "max-edge";
    std::string growth_method = "pct-change";
    std::string kind = "mst";
    std::string root = "min-pair";
    std::string mode;
    std::string from_mlp_table;
    std::string subsets;
    std::string labels;
    std::vector<std::string> inputs;
    std::size_t window = 5;
    std::size_t step = 1;
    std::size_t boot_n = 1000;
    std::size_t runs = 200;
    double pos_thr = 0.9;
    double neg_thr = -0.5;
    double boot_level = 0.9;
    double threshold = 0.9;
    std::uint64_t seed = 1;
    bool from_matrix = false;
    bool skip_constant = false;
    bool no_ci = false;
    bool print_config = false;
};

std::string effective_indicator(const Options& o, const std::string& path) {
    return o.indicator.empty() ? file_stem(path) : o.indicator;
}

void print_kv(const char* key, const std::string& value) {
    std::cout << key << "=" << value << "\n";
}

void print_kv(const char* key, std::size_t value) {
    std::cout << key << "=" << value << "\n";
}

void print_kv(const char* key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", value);
    std::cout << key << "=" << buf << "\n";
}

struct PanelGuard {
    ecl_panel* p = nullptr;
    ~PanelGuard() { ecl_panel_free(p); }
};
struct MatrixGuard {
    ecl_matrix* m = nullptr;
    ~MatrixGuard() { ecl_matrix_free(m); }
};
struct TreeGuard {
    ecl_tree* t = nullptr;
    ~TreeGuard() { ecl_tree_free(t); }
};
struct TableGuard {
    ecl_mlp_table* t = nullptr;
    ~TableGuard() { ecl_mlp_table_free(t); }
};
struct TrendGuard {
    ecl_trend* t = nullptr;
    ~TrendGuard() { ecl_trend_free(t); }
};
struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { ecl_string_free(s); }
};

std::string window_file_tag(int y0, int y1) {
    return std::to_string(y0) + "-" + std::to_string(y1);
}

int cmd_distances(const Options& o) {
    const std::string ind = effective_indicator(o, o.input);
    if (o.print_config) {
        print_kv("input", o.input);
        print_kv("indicator", ind);
        print_kv("window", o.window);
        print_kv("step", o.step);
        print_kv("metric", o.metric);
        print_kv("out", o.out_dir);
        return 0;
    }
    PanelGuard panel;
    if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p)) return fail(rc);
    std::size_t count = 0;
    if (int rc = ecl_panel_window_count(panel.p, o.window, o.step, &count)) return fail(rc);
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    for (std::size_t w = 0; w < count; ++w) {
        std::size_t start = 0, length = 0;
        int y0 = 0, y1 = 0;
        if (int rc = ecl_panel_window(panel.p, o.window, o.step, w, &start, &length, &y0, &y1))
            return fail(rc);
        MatrixGuard dist, corr;
        if (int rc = ecl_distance_matrix(panel.p, start, length, o.metric.c_str(), &dist.m,
                                         &corr.m))
            return fail(rc);
        const std::string tag = ind + "_" + window_file_tag(y0, y1);
        const std::string dist_path = join_out(o.out_dir, tag + "_dist.csv");
        if (int rc = ecl_matrix_write_csv(dist.m, dist_path.c_str())) return fail(rc);
        note_written(dist_path);
        if (corr.m) {
            const std::string corr_path = join_out(o.out_dir, tag + "_corr.csv");
            if (int rc = ecl_matrix_write_csv(corr.m, corr_path.c_str())) return fail(rc);
            note_written(corr_path);
        }
    }
    return 0;
}

int cmd_trend(const Options& o) {
    const std::string ind = effective_indicator(o, o.input);
    if (o.print_config) {
        print_kv("input", o.input);
        print_kv("indicator", ind);
        print_kv("window", o.window);
        print_kv("step", o.step);
        print_kv("metric", o.metric);
        print_kv("boot-level", o.boot_level);
        print_kv("boot-n", o.boot_n);
        print_kv("seed", o.seed);
        print_kv("with-ci", std::string(o.no_ci ? "false" : "true"));
        print_kv("out", o.out_dir);
        return 0;
    }
    PanelGuard panel;
    if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p)) return fail(rc);
    TrendGuard trend;
    if (int rc = ecl_trend_compute(panel.p, o.window, o.step, o.metric.c_str(),
                                   o.no_ci ? 0 : 1, o.boot_level, o.boot_n, o.seed,
                                   &trend.t))
        return fail(rc);
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    const std::string trend_path = join_out(o.out_dir, ind + "_trend.csv");
    if (int rc = ecl_trend_write_csv(trend.t, trend_path.c_str())) return fail(rc);
    note_written(trend_path);

    const std::size_t n = ecl_trend_n(trend.t);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = ecl_trend_value(trend.t, i);
    StringGuard json;
    if (int rc = ecl_fit_exp_decay_json(values.data(), n, static_cast<double>(o.step),
                                        &json.s))
        return fail(rc);
    return write_text(join_out(o.out_dir, ind + "_fit.json"), json.s);
}

int cmd_mamlp(const Options& o) {
    const std::string source = o.from_mlp_table.empty() ? o.input : o.from_mlp_table;
    const std::string ind = effective_indicator(o, source);
    if (o.print_config) {
        print_kv("input", source);
        print_kv("indicator", ind);
        print_kv("from-mlp-table", std::string(o.from_mlp_table.empty() ? "false" : "true"));
        print_kv("window", o.window);
        print_kv("step", o.step);
        print_kv("metric", o.metric);
        print_kv("mlp-mode", o.mlp_mode);
        print_kv("pos-thr", o.pos_thr);
        print_kv("neg-thr", o.neg_thr);
        print_kv("skip-constant", std::string(o.skip_constant ? "true" : "false"));
        print_kv("out", o.out_dir);
        return 0;
    }
    TableGuard table;
    if (!o.from_mlp_table.empty()) {
        if (int rc = ecl_mlp_table_from_csv(o.from_mlp_table.c_str(), ind.c_str(), &table.t))
            return fail(rc);
    } else {
        PanelGuard panel;
        if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p))
            return fail(rc);
        if (int rc = ecl_mlp_table_build(panel.p, o.window, o.step, o.metric.c_str(),
                                         o.mlp_mode.c_str(), &table.t))
            return fail(rc);
    }
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    const std::string table_path = join_out(o.out_dir, ind + "_mlp.csv");
    if (int rc = ecl_mlp_table_write_csv(table.t, table_path.c_str())) return fail(rc);
    note_written(table_path);

    MatrixGuard corr;
    if (int rc = ecl_movement_correlations(table.t, o.skip_constant ? 1 : 0, &corr.m,
                                           nullptr))
        return fail(rc);
    const std::string corr_path = join_out(o.out_dir, ind + "_movement_corr.csv");
    if (int rc = ecl_matrix_write_csv(corr.m, corr_path.c_str())) return fail(rc);
    note_written(corr_path);

    StringGuard report;
    if (int rc = ecl_cluster_report_json(corr.m, o.pos_thr, o.neg_thr, ind.c_str(),
                                         &report.s))
        return fail(rc);
    return write_text(join_out(o.out_dir, ind + "_clusters.json"), report.s);
}

int tree_from_matrix(const Options& o, const std::string& ind) {
    MatrixGuard dist;
    if (int rc = ecl_matrix_from_csv(o.input.c_str(), &dist.m)) return fail(rc);
    const char* kind = o.kind == "mamlp" ? "mst" : o.kind.c_str();
    if (o.kind == "mamlp") {
        bool has_avg = false;
        for (std::size_t i = 0; i < ecl_matrix_n(dist.m); ++i)
            if (std::string(ecl_matrix_label(dist.m, i)) == "AVG") has_avg = true;
        if (!has_avg)
            return fail_msg("matrix input for a mamlp tree must contain an AVG entry");
    }
    TreeGuard tree;
    if (int rc = ecl_tree_build(dist.m, kind, o.root.c_str(), &tree.t)) return fail(rc);
    const std::string path = join_out(o.out_dir, ind + "_" + o.kind + ".dot");
    if (int rc = ecl_tree_write_dot(tree.t, path.c_str())) return fail(rc);
    note_written(path);
    return 0;
}

int cmd_tree(const Options& o) {
    const std::string ind = effective_indicator(o, o.input);
    if (o.print_config) {
        print_kv("input", o.input);
        print_kv("indicator", ind);
        print_kv("kind", o.kind);
        print_kv("root", o.root);
        print_kv("from-matrix", std::string(o.from_matrix ? "true" : "false"));
        print_kv("window", o.window);
        print_kv("step", o.step);
        print_kv("metric", o.metric);
        print_kv("out", o.out_dir);
        return 0;
    }
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    if (o.from_matrix) return tree_from_matrix(o, ind);

    PanelGuard panel;
    if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p)) return fail(rc);
    std::size_t count = 0;
    if (int rc = ecl_panel_window_count(panel.p, o.window, o.step, &count)) return fail(rc);
    for (std::size_t w = 0; w < count; ++w) {
        std::size_t start = 0, length = 0;
        int y0 = 0, y1 = 0;
        if (int rc = ecl_panel_window(panel.p, o.window, o.step, w, &start, &length, &y0, &y1))
            return fail(rc);
        MatrixGuard dist;
        int rc = o.kind == "mamlp"
                     ? ecl_augmented_matrix(panel.p, start, length, o.metric.c_str(),
                                            &dist.m, nullptr)
                     : ecl_distance_matrix(panel.p, start, length, o.metric.c_str(),
                                           &dist.m, nullptr);
        if (rc) return fail(rc);
        TreeGuard tree;
        const char* kind = o.kind == "mamlp" ? "mst" : o.kind.c_str();
        if (int rc2 = ecl_tree_build(dist.m, kind, o.root.c_str(), &tree.t))
            return fail(rc2);
        const std::string path = join_out(
            o.out_dir, ind + "_" + window_file_tag(y0, y1) + "_" + o.kind + ".dot");
        if (int rc2 = ecl_tree_write_dot(tree.t, path.c_str())) return fail(rc2);
        note_written(path);
    }
    return 0;
}

int cmd_shuffle(const Options& o) {
    const bool from_table = !o.from_mlp_table.empty();
    std::string mode = o.mode;
    if (mode.empty()) mode = from_table ? "both" : "stack";
    const std::string source = from_table ? o.from_mlp_table : o.input;
    const std::string ind = effective_indicator(o, source);
    if (o.print_config) {
        print_kv("input", source);
        print_kv("indicator", ind);
        print_kv("mode", mode);
        print_kv("runs", o.runs);
        print_kv("seed", o.seed);
        print_kv("window", o.window);
        print_kv("step", o.step);
        print_kv("metric", o.metric);
        print_kv("pos-thr", o.pos_thr);
        print_kv("neg-thr", o.neg_thr);
        print_kv("out", o.out_dir);
        return 0;
    }
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    if (mode == "stack") {
        if (from_table)
            return fail_msg("stack mode shuffles a panel, not an mlp table");
        PanelGuard panel;
        if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p))
            return fail(rc);
        const std::string path = join_out(o.out_dir, ind + "_shuffle_stack.csv");
        if (int rc = ecl_shuffle_stack_csv(panel.p, o.window, o.step, o.metric.c_str(),
                                           o.runs, o.seed, path.c_str()))
            return fail(rc);
        note_written(path);
        return 0;
    }
    if (mode != "columns" && mode != "rows" && mode != "both")
        return fail_msg("unknown shuffle mode '" + mode + "'");
    TableGuard table;
    if (from_table) {
        if (int rc = ecl_mlp_table_from_csv(o.from_mlp_table.c_str(), ind.c_str(), &table.t))
            return fail(rc);
    } else {
        PanelGuard panel;
        if (int rc = ecl_panel_load(o.input.c_str(), 0, ind.c_str(), &panel.p))
            return fail(rc);
        if (int rc = ecl_mlp_table_build(panel.p, o.window, o.step, o.metric.c_str(),
                                         o.mlp_mode.c_str(), &table.t))
            return fail(rc);
    }
    const std::string path = join_out(o.out_dir, ind + "_shuffle_mlp-" + mode + ".csv");
    if (int rc = ecl_shuffle_mlp_csv(table.t, mode.c_str(), o.runs, o.seed, o.pos_thr,
                                     o.neg_thr, path.c_str()))
        return fail(rc);
    note_written(path);
    return 0;
}

int cmd_factor_graph(const Options& o) {
    if (o.print_config) {
        std::string files;
        for (const auto& f : o.inputs) files += (files.empty() ? "" : " ") + f;
        print_kv("inputs", files);
        print_kv("labels", o.labels.empty() ? std::string("<file stems>") : o.labels);
        print_kv("threshold", o.threshold);
        print_kv("subsets", o.subsets.empty() ? std::string("<leave-one-out>") : o.subsets);
        print_kv("out", o.out_dir);
        return 0;
    }
    std::vector<std::string> labels;
    if (!o.labels.empty()) {
        std::string cur;
        for (char c : o.labels + ",") {
            if (c == ',') {
                if (!cur.empty()) labels.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    } else {
        for (const auto& f : o.inputs) labels.push_back(file_stem(f));
    }
    if (labels.size() != o.inputs.size())
        return fail_msg("need one label per input matrix");

    std::vector<MatrixGuard> guards(o.inputs.size());
    std::vector<const ecl_matrix*> mats;
    std::vector<const char*> label_ptrs;
    for (std::size_t i = 0; i < o.inputs.size(); ++i) {
        if (int rc = ecl_matrix_from_csv(o.inputs[i].c_str(), &guards[i].m)) return fail(rc);
        mats.push_back(guards[i].m);
        label_ptrs.push_back(labels[i].c_str());
    }
    ecl_factor_graph* g = nullptr;
    if (int rc = ecl_factor_graph_build(label_ptrs.data(), mats.data(), mats.size(),
                                        o.threshold, &g))
        return fail(rc);
    if (!ensure_out_dir(o.out_dir)) {
        ecl_factor_graph_free(g);
        return fail_msg("cannot create '" + o.out_dir + "'");
    }
    StringGuard json;
    int rc = ecl_factor_graph_json(g, &json.s);
    if (rc == 0) {
        rc = write_text(join_out(o.out_dir, "factor_graph.json"), json.s);
        if (rc == 0) {
            const std::string csv = join_out(o.out_dir, "factor_graph_clusters.csv");
            rc = ecl_factor_graph_clusters_csv(
                g, o.subsets.empty() ? nullptr : o.subsets.c_str(), csv.c_str());
            if (rc == 0)
                note_written(csv);
            else
                fail(rc);
        }
    } else {
        fail(rc);
    }
    ecl_factor_graph_free(g);
    return rc;
}

int cmd_ingest(const Options& o) {
    const std::string ind = effective_indicator(o, o.input);
    if (o.print_config) {
        print_kv("input", o.input);
        print_kv("indicator", ind);
        print_kv("growth-method", o.growth_method);
        print_kv("out", o.out_dir);
        return 0;
    }
    if (o.growth_method != "pct-change" && o.growth_method != "log-diff")
        return fail_msg("unknown growth method '" + o.growth_method + "'");
    PanelGuard levels;
    if (int rc = ecl_panel_load(o.input.c_str(), 1, ind.c_str(), &levels.p)) return fail(rc);
    PanelGuard growth;
    if (int rc = ecl_panel_to_growth(levels.p, o.growth_method == "log-diff" ? 1 : 0,
                                     &growth.p))
        return fail(rc);
    if (!ensure_out_dir(o.out_dir)) return fail_msg("cannot create '" + o.out_dir + "'");
    const std::string path = join_out(o.out_dir, ind + "_growth.csv");
    if (int rc = ecl_panel_write_csv(growth.p, path.c_str())) return fail(rc);
    note_written(path);
    return 0;
}

void add_common(CLI::App* cmd, Options& o, bool with_window = true) {
    cmd->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--indicator", o.indicator,
                    "Indicator label used in artifact names (default: input file stem)");
    if (with_window) {
        cmd->add_option("--window", o.window, "Window length in years")
            ->capture_default_str();
        cmd->add_option("--step", o.step, "Window step in years")->capture_default_str();
        cmd->add_option("--metric", o.metric,
                        "statistical, euclidean or minkowski:<p>:<r>")
            ->capture_default_str();
    }
    cmd->add_flag("--print-config", o.print_config,
                  "Print the effective settings and exit");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convergence and cluster structure of macroeconomic panels"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file ([subcommand] sections)");
    app.footer("Exit codes: 0 ok, 2 bad input or config, 3 degenerate data, "
               "4 insufficient data.");

    Options o;

    auto* distances = app.add_subcommand("distances", "Windowed distance matrices");
    distances->add_option("input", o.input, "Growth-rate panel CSV")->required();
    add_common(distances, o);

    auto* trend = app.add_subcommand("trend", "Standardized mean distance per window");
    trend->add_option("input", o.input, "Growth-rate panel CSV")->required();
    add_common(trend, o);
    trend->add_option("--boot-level", o.boot_level, "Bootstrap confidence level")
        ->capture_default_str();
    trend->add_option("--boot-n", o.boot_n, "Bootstrap resamples")->capture_default_str();
    trend->add_option("--seed", o.seed, "Bootstrap seed")->capture_default_str();
    trend->add_flag("--no-ci", o.no_ci, "Skip the bootstrap interval");

    auto* mamlp = app.add_subcommand("mamlp", "Average-agent MLP analysis");
    mamlp->add_option("input", o.input, "Growth-rate panel CSV");
    add_common(mamlp, o);
    mamlp->add_option("--from-mlp-table", o.from_mlp_table,
                      "Start from an existing dhat table CSV");
    mamlp->add_option("--mlp-mode", o.mlp_mode, "max-edge or path-sum")
        ->capture_default_str();
    mamlp->add_option("--pos-thr", o.pos_thr, "Strong positive link threshold")
        ->capture_default_str();
    mamlp->add_option("--neg-thr", o.neg_thr, "Strong negative link threshold")
        ->capture_default_str();
    mamlp->add_flag("--skip-constant", o.skip_constant,
                    "Exclude constant dhat rows instead of failing");

    auto* tree = app.add_subcommand("tree", "Hierarchies and chains as DOT files");
    tree->add_option("input", o.input, "Panel CSV, or matrix CSV with --from-matrix")
        ->required();
    add_common(tree, o);
    tree->add_option("--kind", o.kind, "mst, lmst, umlp, bmlp or mamlp")
        ->capture_default_str();
    tree->add_option("--root", o.root, "Chain root entity, or min-pair")
        ->capture_default_str();
    tree->add_flag("--from-matrix", o.from_matrix, "Input is a distance matrix CSV");

    auto* shuffle = app.add_subcommand("shuffle", "Randomization sweeps");
    shuffle->add_option("input", o.input, "Growth-rate panel CSV");
    add_common(shuffle, o);
    shuffle->add_option("--from-mlp-table", o.from_mlp_table,
                        "Shuffle an existing dhat table CSV");
    shuffle->add_option("--mode", o.mode,
                        "stack, columns, rows or both (default: stack for a panel, "
                        "both for a table)");
    shuffle->add_option("--mlp-mode", o.mlp_mode, "max-edge or path-sum")
        ->capture_default_str();
    shuffle->add_option("--runs", o.runs, "Number of shuffled replicas")
        ->capture_default_str();
    shuffle->add_option("--seed", o.seed, "Base seed; run r uses seed + r")
        ->capture_default_str();
    shuffle->add_option("--pos-thr", o.pos_thr, "Strong positive link threshold")
        ->capture_default_str();
    shuffle->add_option("--neg-thr", o.neg_thr, "Strong negative link threshold")
        ->capture_default_str();

    auto* fg = app.add_subcommand("factor-graph", "Indicator-entity factor graph");
    fg->add_option("inputs", o.inputs, "Correlation matrix CSVs, one per indicator")
        ->required()
        ->expected(-1);
    fg->add_option("--labels", o.labels, "Comma-separated indicator labels");
    fg->add_option("--threshold", o.threshold, "|correlation| attachment threshold")
        ->capture_default_str();
    fg->add_option("--subsets", o.subsets,
                   "';'-separated variable subsets, e.g. \"s1 s2 s3;s2 s3 s4\"");
    fg->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
    fg->add_flag("--print-config", o.print_config,
                 "Print the effective settings and exit");

    auto* ingest = app.add_subcommand("ingest", "Convert a levels panel to growth rates");
    ingest->add_option("input", o.input, "Levels panel CSV")->required();
    ingest->add_option("--growth-method", o.growth_method, "pct-change or log-diff")
        ->capture_default_str();
    ingest->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
    ingest->add_option("--indicator", o.indicator,
                       "Indicator label (default: input file stem)");
    ingest->add_flag("--print-config", o.print_config,
                     "Print the effective settings and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (distances->parsed()) return cmd_distances(o);
    if (trend->parsed()) return cmd_trend(o);
    if (mamlp->parsed()) {
        if (o.input.empty() && o.from_mlp_table.empty())
            return fail_msg("mamlp needs a panel or --from-mlp-table");
        return cmd_mamlp(o);
    }
    if (tree->parsed()) return cmd_tree(o);
    if (shuffle->parsed()) {
        if (o.input.empty() && o.from_mlp_table.empty())
            return fail_msg("shuffle needs a panel or --from-mlp-table");
        return cmd_shuffle(o);
    }
    if (fg->parsed()) return cmd_factor_graph(o);
    if (ingest->parsed()) return cmd_ingest(o);
    return 2;
}
