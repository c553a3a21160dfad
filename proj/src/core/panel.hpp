#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ecoclust {

enum class PanelKind { growth_rates, levels };
enum class GrowthMethod { pct_change, log_diff };

// Annual panel of one macroeconomic indicator. The year axis is the full
// header axis; an entity row may stop early (trailing NA in the source file),
// so values[e].size() <= years.size(). Interior gaps are rejected at load.
struct Panel {
    std::string indicator;
    PanelKind kind = PanelKind::growth_rates;
    std::vector<int> years;
    std::vector<std::string> entities;
    std::vector<std::vector<double>> values;

    std::size_t n_entities() const { return entities.size(); }
    // Years available for every entity; windows never reach past this.
    std::size_t common_years() const;
    int entity_index(const std::string& code) const; // -1 when absent
};

// Analysis window over the panel's year axis. `length` is the effective
// length after truncation against the common year range, always >= 2.
struct Window {
    std::size_t start = 0;
    std::size_t length = 0;
    int start_year = 0;
    int end_year = 0;
    std::string label; // two-digit years, e.g. "94-98"
};

// Parse a panel from CSV text. `source` names the input in error messages.
// Header: "entity" followed by strictly increasing integer years (>= 3).
// Rows: entity code plus one numeric cell per year; "NA" (or an empty cell)
// is allowed only as a trailing run and truncates that entity's series.
Panel parse_panel(const std::string& text, const std::string& source,
                  PanelKind kind, const std::string& indicator);

Panel load_panel(const std::string& path, PanelKind kind,
                 const std::string& indicator);

// Convert a levels panel to growth rates; the first year drops out.
// pct_change: (x_t - x_{t-1}) / x_{t-1}, log_diff: ln(x_t / x_{t-1}).
Panel to_growth_rates(const Panel& p, GrowthMethod method);

// Rolling windows of nominal length T advancing by `step` years. Windows are
// laid out on the full year axis; the trailing ones shrink to the common
// year range, and any window left with fewer than 2 years is dropped.
std::vector<Window> make_windows(const Panel& p, std::size_t T, std::size_t step);

std::string window_label(int start_year, int end_year);

// Panel back to CSV, mirroring the input format (6-decimal values, NA tails).
std::string panel_to_csv(const Panel& p);

} // namespace ecoclust
