#include "core/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace ecoclust {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw input_error("write failed for '" + path + "'");
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

double parse_cell(const std::string& cell, const std::string& source, std::size_t lineno) {
    double v;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v))
        throw input_error(source + ":" + std::to_string(lineno) +
                          ": non-numeric cell '" + cell + "'");
    return v;
}

} // namespace

std::string matrix_to_csv(const LabeledMatrix& m) {
    std::string out = "entity";
    for (const auto& l : m.labels) out += "," + l;
    out += "\n";
    for (std::size_t i = 0; i < m.n(); ++i) {
        out += m.labels[i];
        for (std::size_t j = 0; j < m.n(); ++j) out += "," + format_fixed(m.at(i, j), 6);
        out += "\n";
    }
    return out;
}

LabeledMatrix matrix_from_csv(const std::string& text, const std::string& source) {
    const auto lines = split_lines(text);
    if (lines.size() < 2) throw input_error(source + ": matrix file too short");
    const auto header = split_line(lines[0]);
    if (header.size() < 3 || header[0] != "entity")
        throw input_error(source + ":1: matrix header must be 'entity,<codes...>'");

    LabeledMatrix m = LabeledMatrix::zeros({header.begin() + 1, header.end()});
    const std::size_t n = m.n();
    if (lines.size() != n + 1)
        throw input_error(source + ": expected " + std::to_string(n) +
                          " matrix rows, got " + std::to_string(lines.size() - 1));
    for (std::size_t i = 0; i < n; ++i) {
        const auto cells = split_line(lines[i + 1]);
        const std::size_t lineno = i + 2;
        if (cells.size() != n + 1)
            throw input_error(source + ":" + std::to_string(lineno) + ": row has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(n + 1));
        if (cells[0] != m.labels[i])
            throw input_error(source + ":" + std::to_string(lineno) + ": row label '" +
                              cells[0] + "' does not match header order");
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = parse_cell(cells[j + 1], source, lineno);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-9)
                throw input_error(source + ": matrix is not symmetric at (" +
                                  m.labels[i] + ", " + m.labels[j] + ")");
    return m;
}

LabeledMatrix load_matrix_csv(const std::string& path) {
    return matrix_from_csv(read_file(path), path);
}

std::string mlp_table_to_csv(const MlpTable& t) {
    std::string out = "window";
    for (const auto& e : t.entities) out += "," + e;
    out += "\n";
    for (std::size_t w = 0; w < t.n_windows(); ++w) {
        out += t.window_labels[w];
        for (std::size_t e = 0; e < t.n_entities(); ++e)
            out += "," + format_fixed(t.values[e][w], 6);
        out += "\n";
    }
    return out;
}

MlpTable mlp_table_from_csv(const std::string& text, const std::string& source,
                            const std::string& indicator) {
    const auto lines = split_lines(text);
    if (lines.size() < 2) throw input_error(source + ": table file too short");
    const auto header = split_line(lines[0]);
    if (header.size() < 2 || header[0] != "window")
        throw input_error(source + ":1: table header must be 'window,<codes...>'");

    MlpTable t;
    t.indicator = indicator;
    t.entities.assign(header.begin() + 1, header.end());
    t.values.assign(t.entities.size(), {});
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto cells = split_line(lines[li]);
        if (cells.size() != header.size())
            throw input_error(source + ":" + std::to_string(li + 1) + ": row has " +
                              std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(header.size()));
        t.window_labels.push_back(cells[0]);
        for (std::size_t e = 0; e < t.entities.size(); ++e)
            t.values[e].push_back(parse_cell(cells[e + 1], source, li + 1));
    }
    return t;
}

MlpTable load_mlp_table_csv(const std::string& path, const std::string& indicator) {
    return mlp_table_from_csv(read_file(path), path, indicator);
}

std::string trend_to_csv(const std::vector<TrendPoint>& points,
                         const std::vector<std::pair<double, double>>* cis) {
    std::string out = "window,value,ci_lo,ci_hi\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += points[i].label + "," + format_fixed(points[i].value, 6);
        if (cis) {
            out += "," + format_fixed((*cis)[i].first, 6) + "," +
                   format_fixed((*cis)[i].second, 6);
        } else {
            out += ",,";
        }
        out += "\n";
    }
    return out;
}

std::string fit_to_json(const ExpDecayFit& fit, double step_years) {
    ordered_json j;
    j["amplitude"] = fit.amplitude;
    if (fit.decaying) {
        j["tau_windows"] = fit.tau;
        j["tau_years"] = fit.tau * step_years;
    } else {
        j["tau_windows"] = nullptr;
        j["tau_years"] = nullptr;
    }
    j["r_squared"] = fit.r_squared;
    j["points_used"] = fit.points;
    j["decaying"] = fit.decaying;
    return j.dump(2) + "\n";
}

std::string cluster_report_json(const std::string& indicator, double pos_thr,
                                double neg_thr, const ClusterPartition& part,
                                const std::vector<SensitivityEntry>& sens,
                                const std::vector<std::string>& excluded) {
    ordered_json j;
    j["indicator"] = indicator;
    j["thresholds"] = {{"positive", pos_thr}, {"negative", neg_thr}};
    j["clusters"] = part.clusters;
    j["outliers"] = part.outliers;
    j["unclustered"] = part.unclustered;
    j["sensitivity"] = ordered_json::array();
    for (const auto& s : sens)
        j["sensitivity"].push_back({{"entity", s.entity}, {"chi", s.chi}});
    if (!excluded.empty()) j["excluded"] = excluded;
    return j.dump(2) + "\n";
}

std::string factor_graph_to_json(const FactorGraph& g) {
    ordered_json j;
    j["threshold"] = g.threshold;
    j["variables"] = g.variables;
    j["entities"] = g.entities;
    j["edges"] = ordered_json::array();
    for (std::size_t e = 0; e < g.entities.size(); ++e) {
        ordered_json vars = ordered_json::array();
        for (std::size_t v = 0; v < g.variables.size(); ++v)
            if (g.edges[e] & (1u << v)) vars.push_back(g.variables[v]);
        j["edges"].push_back({{"entity", g.entities[e]}, {"variables", vars}});
    }
    j["excluded"] = g.excluded;
    return j.dump(2) + "\n";
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

} // namespace

std::string cluster_rows_to_csv(const std::vector<ClusterRow>& rows) {
    std::string out = "subset,members,links,possible,p,entropy\n";
    for (const auto& r : rows) {
        out += join(r.subset, " ") + "," + join(r.members, " ") + "," +
               std::to_string(r.links) + "," + std::to_string(r.possible) + ",";
        out += std::isnan(r.p) ? "" : format_fixed(r.p, 6);
        out += "," + format_fixed(r.entropy, 6) + "\n";
    }
    return out;
}

std::string shuffle_rows_to_csv(const std::vector<ShuffleCsvRow>& rows) {
    std::string out = "seed,mode,amplitude,ratio,c_max,c_min,strong_link_count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.seed) + "," + r.mode + ",";
        out += r.amplitude ? format_fixed(*r.amplitude, 6) : "";
        out += ",";
        out += r.ratio ? format_fixed(*r.ratio, 6) : "";
        out += ",";
        out += r.c_max ? format_fixed(*r.c_max, 6) : "";
        out += ",";
        out += r.c_min ? format_fixed(*r.c_min, 6) : "";
        out += ",";
        out += r.strong_links ? std::to_string(*r.strong_links) : "";
        out += "\n";
    }
    return out;
}

std::string randomization_summary_to_json(const RandomizationSummary& s,
                                          const std::string& mode) {
    ordered_json j;
    j["mode"] = mode;
    j["runs"] = s.runs.size();
    j["fraction_zero_strong"] = s.fraction_zero_strong;
    j["real"] = {{"positive", s.real_positive}, {"negative", s.real_negative}};
    j["per_run"] = ordered_json::array();
    for (const auto& r : s.runs)
        j["per_run"].push_back(
            {{"seed", r.seed}, {"positive", r.positive}, {"negative", r.negative}});
    return j.dump(2) + "\n";
}

} // namespace ecoclust
