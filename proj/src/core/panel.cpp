#include "core/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace ecoclust {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
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

bool is_na(const std::string& cell) { return cell.empty() || cell == "NA"; }

bool parse_double(const std::string& cell, double& out) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_int(const std::string& cell, int& out) {
    const char* first = cell.data();
    const char* last = first + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

std::size_t Panel::common_years() const {
    std::size_t m = years.size();
    for (const auto& v : values) m = std::min(m, v.size());
    return m;
}

int Panel::entity_index(const std::string& code) const {
    for (std::size_t i = 0; i < entities.size(); ++i)
        if (entities[i] == code) return static_cast<int>(i);
    return -1;
}

Panel parse_panel(const std::string& text, const std::string& source,
                  PanelKind kind, const std::string& indicator) {
    Panel p;
    p.kind = kind;
    p.indicator = indicator;

    std::vector<std::string> lines;
    {
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
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw input_error(source + ": empty panel file");

    const auto header = split_csv_line(lines[0]);
    if (header.empty() || header[0] != "entity")
        throw input_error(source + ":1: header must start with 'entity'");
    for (std::size_t i = 1; i < header.size(); ++i) {
        int y;
        if (!parse_int(header[i], y))
            throw input_error(source + ":1: year column '" + header[i] + "' is not an integer");
        if (!p.years.empty() && y <= p.years.back())
            throw input_error(source + ":1: years must be strictly increasing");
        p.years.push_back(y);
    }
    if (p.years.size() < 3)
        throw insufficient_error(source + ": need at least 3 year columns, got " +
                                 std::to_string(p.years.size()));

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        const auto cells = split_csv_line(lines[li]);
        const std::string lineno = std::to_string(li + 1);
        if (cells.size() != header.size())
            throw input_error(source + ":" + lineno + ": row has " +
                              std::to_string(cells.size()) + " cells, header has " +
                              std::to_string(header.size()));
        const std::string& code = cells[0];
        if (code.empty())
            throw input_error(source + ":" + lineno + ": empty entity code");
        if (p.entity_index(code) >= 0)
            throw input_error(source + ":" + lineno + ": duplicate entity '" + code + "'");

        std::vector<double> row;
        bool in_tail = false;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (is_na(cells[i])) {
                in_tail = true;
                continue;
            }
            if (in_tail)
                throw input_error(source + ":" + lineno + ": entity '" + code +
                                  "' has an interior NA before year " +
                                  std::to_string(p.years[i - 1]));
            double v;
            if (!parse_double(cells[i], v) || !std::isfinite(v))
                throw input_error(source + ":" + lineno + ": entity '" + code +
                                  "' has non-numeric cell '" + cells[i] + "'");
            row.push_back(v);
        }
        if (row.size() < 2)
            throw insufficient_error(source + ": entity '" + code +
                                     "' has fewer than 2 usable years");
        p.entities.push_back(code);
        p.values.push_back(std::move(row));
    }

    if (p.entities.size() < 2)
        throw insufficient_error(source + ": need at least 2 entities, got " +
                                 std::to_string(p.entities.size()));
    return p;
}

Panel load_panel(const std::string& path, PanelKind kind, const std::string& indicator) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open panel file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_panel(buf.str(), path, kind, indicator);
}

Panel to_growth_rates(const Panel& p, GrowthMethod method) {
    if (p.kind != PanelKind::levels)
        throw input_error("panel '" + p.indicator + "' already holds growth rates");
    Panel g;
    g.indicator = p.indicator;
    g.kind = PanelKind::growth_rates;
    g.years.assign(p.years.begin() + 1, p.years.end());
    g.entities = p.entities;
    for (std::size_t e = 0; e < p.values.size(); ++e) {
        const auto& x = p.values[e];
        std::vector<double> r;
        for (std::size_t t = 1; t < x.size(); ++t) {
            if (method == GrowthMethod::pct_change) {
                if (x[t - 1] == 0.0)
                    throw degenerate_error("zero base value for entity '" + p.entities[e] +
                                           "' at year " + std::to_string(p.years[t - 1]));
                r.push_back((x[t] - x[t - 1]) / x[t - 1]);
            } else {
                if (x[t] <= 0.0 || x[t - 1] <= 0.0)
                    throw degenerate_error("non-positive level for entity '" + p.entities[e] +
                                           "' near year " + std::to_string(p.years[t]) +
                                           "; log-diff needs positive levels");
                r.push_back(std::log(x[t] / x[t - 1]));
            }
        }
        if (r.size() < 2)
            throw insufficient_error("entity '" + p.entities[e] +
                                     "' has fewer than 2 growth observations");
        g.values.push_back(std::move(r));
    }
    return g;
}

std::string window_label(int start_year, int end_year) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d-%02d", start_year % 100, end_year % 100);
    return buf;
}

std::vector<Window> make_windows(const Panel& p, std::size_t T, std::size_t step) {
    if (T < 2) throw input_error("window length must be at least 2");
    if (step < 1) throw input_error("window step must be at least 1");
    const std::size_t Y = p.years.size();
    if (T > Y)
        throw insufficient_error("window length " + std::to_string(T) +
                                 " exceeds the " + std::to_string(Y) + "-year axis");
    const std::size_t L = p.common_years();
    std::vector<Window> out;
    for (std::size_t start = 0; start + T <= Y; start += step) {
        // Truncation against the common range shortens trailing windows.
        if (L <= start + 1) break;
        const std::size_t eff = std::min(T, L - start);
        if (eff < 2) break;
        Window w;
        w.start = start;
        w.length = eff;
        w.start_year = p.years[start];
        w.end_year = p.years[start + eff - 1];
        w.label = window_label(w.start_year, w.end_year);
        out.push_back(std::move(w));
    }
    if (out.empty())
        throw insufficient_error("no window of length >= 2 fits the common year range");
    return out;
}

std::string panel_to_csv(const Panel& p) {
    std::string out = "entity";
    for (int y : p.years) out += "," + std::to_string(y);
    out += "\n";
    char buf[64];
    for (std::size_t e = 0; e < p.entities.size(); ++e) {
        out += p.entities[e];
        for (std::size_t t = 0; t < p.years.size(); ++t) {
            if (t < p.values[e].size()) {
                std::snprintf(buf, sizeof buf, ",%.6f", p.values[e][t]);
                out += buf;
            } else {
                out += ",NA";
            }
        }
        out += "\n";
    }
    return out;
}

} // namespace ecoclust
