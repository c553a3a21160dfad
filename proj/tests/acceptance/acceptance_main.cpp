// Acceptance suite. Every check below pins an observable behavior of the
// library against reference data shipped in tests/fixtures or against an
// independent oracle computed right here. One line per criterion; the binary
// exits non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/factorgraph.hpp"
#include "core/hierarchy.hpp"
#include "core/io.hpp"
#include "core/mamlp.hpp"
#include "core/metrics.hpp"
#include "core/panel.hpp"
#include "core/rng.hpp"
#include "core/robustness.hpp"
#include "core/trendstats.hpp"

using namespace ecoclust;

namespace {

// ---- tolerances, all pinned -----------------------------------------------
constexpr double kTolCell = 0.02;      // reference matrices carry 2 decimals
constexpr double kTolRepairedCell = 0.005; // three repaired reference cells
constexpr double kTolChiGdp = 0.01;    // sensitivity vs the reference ranking
constexpr double kTolChi = 0.02;       // same, for the shorter-window tables
constexpr double kTolEntropy = 5e-4;   // reference entropies carry 3 decimals
constexpr double kTolTreeWeight = 1e-9;
constexpr double kTolUltra = 1e-12;
constexpr double kTolTauExact = 1e-9;
constexpr double kTauNoisyMedian = 0.15; // median relative error, 5% noise
constexpr double kTolBackbone = 0.005;

int g_failed = 0;
std::vector<std::string> g_notes;

bool check(bool ok, const std::string& note) {
    if (!ok && g_notes.size() < 12) g_notes.push_back(note);
    return ok;
}

void report(int id, const char* name, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name);
    if (!ok) {
        ++g_failed;
        for (const auto& n : g_notes) std::printf("       - %s\n", n.c_str());
    }
    g_notes.clear();
    std::fflush(stdout);
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("ECOCLUST_FIXTURES");
    if (!dir) {
        std::fprintf(stderr, "ECOCLUST_FIXTURES is not set\n");
        std::exit(1);
    }
    return std::string(dir) + "/" + name;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- criterion 1: movement correlations vs the reference GDP matrix -------
//
// The reference correlation matrix was printed from the same trajectories the
// fixture table holds, so recomputing it must land within print precision.
// Three of its printed cells are internally inconsistent with the trajectory
// table (sign or digit slips); those are compared against the repaired values
// stored in the fixture, at a tighter tolerance.

bool criterion1() {
    MlpTable t = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    LabeledMatrix ref = load_matrix_csv(fixture("table2_gdp_corr.csv"));
    MovementCorrelations mc = movement_correlations(t);
    bool ok = check(mc.corr.labels == ref.labels, "entity sets differ");
    if (!ok) return false;

    const std::set<std::pair<std::string, std::string>> repaired{
        {"ES", "FI"}, {"ES", "GR"}, {"GR", "IT"}};
    for (std::size_t i = 0; i < ref.n(); ++i)
        for (std::size_t j = i + 1; j < ref.n(); ++j) {
            const std::string a = ref.labels[i], b = ref.labels[j];
            const double got = mc.corr.at(i, j);
            const double want = ref.at(i, j);
            const double tol = repaired.count({a, b}) ? kTolRepairedCell : kTolCell;
            ok &= check(std::abs(got - want) <= tol,
                        a + "-" + b + ": got " + fmt(got) + ", reference " +
                            fmt(want));
        }
    return ok;
}

// ---- criterion 2: sensitivity rankings vs the reference tables ------------

struct ChiRef {
    const char* entity;
    double chi;
};

const std::vector<ChiRef> kChiGdp{
    {"DK", 9.08}, {"PT", 8.71}, {"DE", 8.68}, {"SE", 8.47}, {"IE", 8.26},
    {"BE", 8.25}, {"FR", 8.21}, {"AT", 7.60}, {"UK", 7.59}, {"IT", 5.68},
    {"GR", 5.64}, {"LU", 5.40}, {"NL", 3.25}, {"ES", 2.97}, {"FI", 2.68}};
const std::vector<ChiRef> kChiFce{
    {"BE", 8.34}, {"IE", 8.34}, {"ES", 8.32}, {"NL", 8.32}, {"PT", 8.32},
    {"SE", 8.32}, {"UK", 8.14}, {"DE", 7.42}, {"AT", 7.15}, {"FR", 3.07},
    {"FI", 3.06}, {"LU", 1.81}, {"DK", 1.61}, {"GR", 1.60}, {"IT", 1.13}};
const std::vector<ChiRef> kChiGcf{
    {"AT", 4.99}, {"SE", 4.69}, {"ES", 4.66}, {"FR", 4.66}, {"BE", 4.58},
    {"DK", 4.18}, {"FI", 4.09}, {"IE", 3.04}, {"PT", 2.89}, {"DE", 2.85},
    {"IT", 2.70}, {"UK", 2.68}, {"GR", 2.63}, {"LU", 2.39}, {"NL", 2.31}};
const std::vector<ChiRef> kChiNex{
    {"PT", 5.23}, {"DE", 4.92}, {"IE", 4.76}, {"SE", 4.76}, {"IT", 4.41},
    {"AT", 3.99}, {"DK", 3.50}, {"FR", 3.24}, {"FI", 3.23}, {"LU", 3.23},
    {"UK", 2.91}, {"BE", 2.71}, {"NL", 2.63}, {"GR", 2.49}, {"ES", 1.69}};

MlpTable first_windows(MlpTable t, std::size_t k) {
    if (t.n_windows() <= k) return t;
    t.window_labels.resize(k);
    for (auto& row : t.values) row.resize(k);
    return t;
}

bool check_chi(const std::string& name, const LabeledMatrix& corr,
               const std::vector<ChiRef>& ref, double tol) {
    auto chi = sensitivity(corr);
    std::map<std::string, double> got;
    for (const auto& e : chi) got[e.entity] = e.chi;
    bool ok = check(got.size() == ref.size(), name + ": entity count differs");
    for (const auto& r : ref) {
        auto it = got.find(r.entity);
        if (!check(it != got.end(), name + ": missing " + std::string(r.entity))) {
            ok = false;
            continue;
        }
        ok &= check(std::abs(it->second - r.chi) <= tol,
                    name + " " + r.entity + ": chi " + fmt(it->second) +
                        " vs reference " + fmt(r.chi));
    }
    return ok;
}

bool check_corr_table(const std::string& name, const MlpTable& t,
                      const std::string& ref_csv, const std::vector<ChiRef>& ref_chi,
                      double tol) {
    LabeledMatrix ref = load_matrix_csv(fixture(ref_csv));
    MovementCorrelations mc = movement_correlations(t);
    bool ok = check(mc.corr.labels == ref.labels, name + ": entity sets differ");
    if (!ok) return false;
    for (std::size_t i = 0; i < ref.n(); ++i)
        for (std::size_t j = i + 1; j < ref.n(); ++j)
            ok &= check(std::abs(mc.corr.at(i, j) - ref.at(i, j)) <= kTolCell,
                        name + " " + ref.labels[i] + "-" + ref.labels[j] +
                            ": got " + fmt(mc.corr.at(i, j)) + ", reference " +
                            fmt(ref.at(i, j)));
    ok &= check_chi(name, mc.corr, ref_chi, tol);
    return ok;
}

bool criterion2() {
    bool ok = true;

    MlpTable gdp = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    MovementCorrelations mc = movement_correlations(gdp);
    ok &= check_chi("GDP", mc.corr, kChiGdp, kTolChiGdp);
    auto chi = sensitivity(mc.corr);
    ok &= check(chi[0].entity == std::string("DK"),
                "GDP: top-ranked entity is " + chi[0].entity);
    ok &= check(std::abs(chi[0].chi - 9.08) <= kTolChiGdp,
                "GDP: DK chi " + fmt(chi[0].chi));

    // The FCE trajectory table repeats its first window as a final row; the
    // reference correlations cover the six distinct windows, so the
    // comparison is restricted to those.
    MlpTable fce = first_windows(load_mlp_table_csv(fixture("a2_fce_mlp.csv"), "FCE"), 6);
    ok &= check_corr_table("FCE", fce, "a3_fce_corr.csv", kChiFce, kTolChi);

    MlpTable gcf = load_mlp_table_csv(fixture("a4_gcf_mlp.csv"), "GCF");
    ok &= check_corr_table("GCF", gcf, "a5_gcf_corr.csv", kChiGcf, kTolChi);

    MlpTable nex = load_mlp_table_csv(fixture("a6_nex_mlp.csv"), "NEX");
    ok &= check_corr_table("NEX", nex, "a7_nex_corr.csv", kChiNex, kTolChi);
    return ok;
}

// ---- criterion 3: factor graph vs the reference clustering ----------------

const std::map<std::string, std::set<std::string>> kRefEdges{
    {"AT", {"FCE", "GCF"}},
    {"BE", {"GDP", "FCE"}},
    {"DE", {"GDP", "FCE", "NEX"}},
    {"DK", {"GDP", "GCF"}},
    {"ES", {"FCE", "GCF"}},
    {"FI", {"GCF", "NEX"}},
    {"FR", {"GDP", "GCF"}},
    {"UK", {"GDP", "FCE", "GCF"}},
    {"IE", {"GDP", "FCE", "NEX"}},
    {"IT", {"GDP", "NEX"}},
    {"LU", {"NEX"}},
    {"NL", {"FCE"}},
    {"PT", {"GDP", "FCE", "GCF", "NEX"}},
    {"SE", {"GDP", "FCE", "GCF", "NEX"}}};

struct ClusterRef {
    std::vector<std::string> subset;
    std::vector<std::string> members;
    int links;
    int possible;
    double p;
    double entropy;
};

const std::vector<ClusterRef> kRefClusters{
    {{"GDP", "FCE", "GCF"},
     {"AT", "BE", "DK", "ES", "FR", "NL", "UK"},
     14, 28, 0.500, 0.347},
    {{"FCE", "GCF", "NEX"}, {"AT", "ES", "FI", "LU", "NL"}, 8, 20, 0.400, 0.367},
    {{"GDP", "FCE", "NEX"},
     {"BE", "DE", "IE", "IT", "LU", "NL"},
     12, 24, 0.500, 0.347},
    {{"GDP", "GCF", "NEX"}, {"DK", "FI", "FR", "IT", "LU"}, 9, 20, 0.450, 0.359}};

bool criterion3() {
    const std::vector<std::string> names{"GDP", "FCE", "GCF", "NEX"};
    const std::vector<LabeledMatrix> mats{
        load_matrix_csv(fixture("table2_gdp_corr.csv")),
        load_matrix_csv(fixture("a3_fce_corr.csv")),
        load_matrix_csv(fixture("a5_gcf_corr.csv")),
        load_matrix_csv(fixture("a7_nex_corr.csv"))};

    FactorGraph g = build_factor_graph(names, mats, 0.9);
    bool ok = check(g.excluded == std::vector<std::string>{"GR"},
                    "expected exactly GR excluded at threshold 0.9");
    ok &= check(g.entities.size() == kRefEdges.size(), "attached entity count");
    for (std::size_t e = 0; e < g.entities.size(); ++e) {
        std::set<std::string> vars;
        for (std::size_t v = 0; v < names.size(); ++v)
            if (g.edges[e] & (1u << v)) vars.insert(names[v]);
        auto it = kRefEdges.find(g.entities[e]);
        if (!check(it != kRefEdges.end(), "unexpected entity " + g.entities[e])) {
            ok = false;
            continue;
        }
        ok &= check(vars == it->second, g.entities[e] + ": edge set differs");
    }

    // at a looser threshold GR re-enters, attached to GDP and NEX only
    FactorGraph g8 = build_factor_graph(names, mats, 0.8);
    bool gr_found = false;
    for (std::size_t e = 0; e < g8.entities.size(); ++e) {
        if (g8.entities[e] != "GR") continue;
        gr_found = true;
        std::set<std::string> vars;
        for (std::size_t v = 0; v < names.size(); ++v)
            if (g8.edges[e] & (1u << v)) vars.insert(names[v]);
        ok &= check(vars == std::set<std::string>{"GDP", "NEX"},
                    "GR at 0.8 attaches to the wrong indicators");
    }
    ok &= check(gr_found, "GR still excluded at threshold 0.8");

    std::vector<std::vector<std::string>> subsets;
    for (const auto& r : kRefClusters) subsets.push_back(r.subset);
    auto rows = enumerate_clusters(g, subsets);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& ref = kRefClusters[i];
        const std::string tag = ref.subset[0] + "-" + ref.subset[1] + "-" + ref.subset[2];
        ok &= check(rows[i].members == ref.members, tag + ": member set differs");
        ok &= check(rows[i].links == ref.links,
                    tag + ": links " + std::to_string(rows[i].links) + " vs " +
                        std::to_string(ref.links));
        ok &= check(rows[i].possible == ref.possible, tag + ": possible differs");
        ok &= check(std::abs(rows[i].p - ref.p) <= kTolEntropy,
                    tag + ": p " + fmt(rows[i].p) + " vs " + fmt(ref.p));
        ok &= check(std::abs(rows[i].entropy - ref.entropy) <= kTolEntropy,
                    tag + ": entropy " + fmt(rows[i].entropy) + " vs " +
                        fmt(ref.entropy));
    }
    return ok;
}

// ---- criterion 4: reference partition at (0.9, -0.5) ----------------------

bool criterion4() {
    LabeledMatrix corr = load_matrix_csv(fixture("table2_gdp_corr.csv"));
    ClusterPartition part = cluster_partition(corr, 0.9, -0.5);

    auto contains_all = [&](const std::vector<std::string>& want) {
        for (const auto& cl : part.clusters) {
            std::set<std::string> have(cl.begin(), cl.end());
            bool all = true;
            for (const auto& w : want) all &= have.count(w) > 0;
            if (all) return true;
        }
        return false;
    };
    bool ok = check(contains_all({"FR", "SE", "DE"}),
                    "no cluster holds FR, SE and DE together");
    ok &= check(contains_all({"BE", "UK", "IE", "DK", "PT"}),
                "no cluster holds BE, UK, IE, DK and PT together");
    bool gr_outlier =
        std::find(part.outliers.begin(), part.outliers.end(), "GR") !=
        part.outliers.end();
    ok &= check(gr_outlier, "GR is not flagged as an anti-correlated outlier");
    return ok;
}

// ---- criterion 5: spanning tree weight vs exhaustive enumeration ----------
//
// Oracle: enumerate every labeled tree on n nodes (sequence decoding walks
// all n^(n-2) of them exactly once) and take the minimum total weight. The
// oracle shares no code with the tree builder.

double min_tree_weight_exhaustive(const LabeledMatrix& d) {
    const std::size_t n = d.n();
    if (n == 2) return d.at(0, 1);
    std::vector<std::size_t> seq(n - 2, 0);
    double best = std::numeric_limits<double>::infinity();
    for (;;) {
        std::vector<int> deg(n, 1);
        for (std::size_t v : seq) ++deg[v];
        double w = 0;
        for (std::size_t k = 0; k < n - 2; ++k) {
            std::size_t leaf = n;
            for (std::size_t i = 0; i < n; ++i)
                if (deg[i] == 1) {
                    leaf = i;
                    break;
                }
            w += d.at(leaf, seq[k]);
            --deg[leaf];
            --deg[seq[k]];
        }
        std::size_t u = n, v = n;
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] == 1) (u == n ? u : v) = i;
        w += d.at(u, v);
        best = std::min(best, w);

        std::size_t pos = 0;
        while (pos < n - 2 && ++seq[pos] == n) seq[pos++] = 0;
        if (pos == n - 2) break;
    }
    return best;
}

bool criterion5() {
    Rng rng(52137);
    bool ok = true;
    for (int rep = 0; rep < 500 && ok; ++rep) {
        const std::size_t n = 3 + rng.below(5); // up to 7 nodes, 16807 trees
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("N" + std::to_string(i));
        LabeledMatrix d = LabeledMatrix::zeros(labels);
        const bool coarse = rep % 3 == 0; // every third matrix forces ties
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double w = 0.1 + rng.uniform();
                if (coarse) w = std::round(w * 10.0) / 10.0;
                d.at(i, j) = d.at(j, i) = w;
            }
        double built = 0;
        for (const auto& e : build_mst(d).edges) built += e.w;
        const double want = min_tree_weight_exhaustive(d);
        ok &= check(std::abs(built - want) <= kTolTreeWeight,
                    "rep " + std::to_string(rep) + " (n=" + std::to_string(n) +
                        "): tree weight " + fmt(built) + " vs minimum " + fmt(want));
    }
    return ok;
}

// ---- criterion 6: ultrametric inequality and subdominance -----------------

bool criterion6() {
    Rng rng(90911);
    bool ok = true;
    for (int rep = 0; rep < 200 && ok; ++rep) {
        const std::size_t n = 4 + rng.below(7);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("E" + std::to_string(i));
        LabeledMatrix d = LabeledMatrix::zeros(labels);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                d.at(i, j) = d.at(j, i) = 0.05 + rng.uniform();
        LabeledMatrix u = subdominant_ultrametric(build_mst(d));
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                ok &= check(u.at(i, j) <= d.at(i, j) + kTolUltra,
                            "rep " + std::to_string(rep) + ": u(" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") exceeds the direct distance");
                for (std::size_t k = 0; k < n && ok; ++k)
                    ok &= check(
                        u.at(i, j) <= std::max(u.at(i, k), u.at(k, j)) + kTolUltra,
                        "rep " + std::to_string(rep) + ": strong triangle violated");
            }
    }
    return ok;
}

// ---- criterion 7: decay fit recovery --------------------------------------

bool criterion7() {
    bool ok = true;
    for (double tau : {5.0, 8.0, 12.5}) {
        std::vector<double> v;
        for (int x = 1; x <= 20; ++x) v.push_back(2.5 * std::exp(-x / tau));
        ExpDecayFit f = fit_exp_decay(v);
        ok &= check(f.decaying, "noiseless tau " + fmt(tau) + ": not decaying");
        ok &= check(std::abs(f.tau - tau) / tau <= kTolTauExact,
                    "noiseless tau " + fmt(tau) + ": got " + fmt(f.tau));
        ok &= check(std::abs(f.amplitude - 2.5) / 2.5 <= kTolTauExact,
                    "noiseless amplitude: got " + fmt(f.amplitude));
        ok &= check(std::abs(f.r_squared - 1.0) <= 1e-9,
                    "noiseless r^2: got " + fmt(f.r_squared));
    }

    Rng root(77510);
    for (double tau : {5.0, 8.0, 12.5}) {
        for (std::size_t n = 4; n <= 19; ++n) {
            std::vector<double> errs;
            Rng rng = root.derive(static_cast<std::uint64_t>(tau * 100) + n);
            for (int rep = 0; rep < 200; ++rep) {
                std::vector<double> v;
                for (std::size_t x = 1; x <= n; ++x) {
                    const double noise = 1.0 + 0.05 * (2.0 * rng.uniform() - 1.0);
                    v.push_back(2.0 * std::exp(-static_cast<double>(x) / tau) * noise);
                }
                ExpDecayFit f = fit_exp_decay(v);
                errs.push_back(f.decaying
                                   ? std::abs(f.tau - tau) / tau
                                   : std::numeric_limits<double>::infinity());
            }
            const double med = median(errs);
            ok &= check(med <= kTauNoisyMedian,
                        "tau " + fmt(tau) + ", n " + std::to_string(n) +
                            ": median relative error " + fmt(med));
        }
    }
    return ok;
}

// ---- criterion 8: shuffling destroys the strong-link structure ------------

bool criterion8() {
    MlpTable t = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    MovementCorrelations mc = movement_correlations(t);
    double real_max = -2, real_min = 2;
    for (std::size_t i = 0; i < mc.corr.n(); ++i)
        for (std::size_t j = i + 1; j < mc.corr.n(); ++j) {
            real_max = std::max(real_max, mc.corr.at(i, j));
            real_min = std::min(real_min, mc.corr.at(i, j));
        }
    bool ok = check(std::abs(real_max - 0.991178) <= 1e-4,
                    "real c_max " + fmt(real_max));
    ok &= check(std::abs(real_min + 0.820989) <= 1e-4, "real c_min " + fmt(real_min));

    std::vector<double> cmax, cmin, strong;
    for (std::uint64_t r = 0; r < 200; ++r) {
        MlpShuffleReport rep = mlp_shuffle_report(t, ShuffleAxis::both, 1 + r, 0.9, -0.8);
        cmax.push_back(std::abs(rep.c_max));
        cmin.push_back(std::abs(rep.c_min));
        strong.push_back(rep.strong_links);
    }
    const double med_max = median(cmax), med_min = median(cmin);
    const double med_strong = median(strong);
    ok &= check(med_max < std::abs(real_max),
                "median shuffled |c_max| " + fmt(med_max) + " not below real");
    ok &= check(med_min < std::abs(real_min),
                "median shuffled |c_min| " + fmt(med_min) + " not below real");
    ok &= check(med_strong <= 1.0,
                "median shuffled strong-link count " + fmt(med_strong));

    // the real table keeps a rich strong-link set at the same thresholds
    StrongLinks sl = strong_links(mc.corr, 0.9, -0.8);
    ok &= check(sl.positive.size() + sl.negative.size() >= 10,
                "real strong-link count unexpectedly small");
    return ok;
}

// ---- criterion 9: pipeline detects a built-in convergence trend -----------
//
// Synthetic panel: 12 entities over 12 years. Entity i follows its own
// oscillation until year i, then locks onto a shared reference path, so each
// successive window sees more entities moving together and the standardized
// mean distance must fall monotonically. A year-shuffled null keeps the
// value sets but destroys the alignment, so its fitted trend slope straddles
// zero.

const double kCommonPath[12] = {0.0, 1.0, -0.8, 0.6,  -1.0, 0.9,
                                -0.5, 1.2, -1.1, 0.7,  -0.9, 1.05};

Panel synthetic_panel(Rng* noise) {
    Panel p;
    p.indicator = "SYN";
    p.kind = PanelKind::growth_rates;
    for (int y = 1993; y <= 2004; ++y) p.years.push_back(y);
    for (int i = 0; i < 12; ++i) {
        char code[8];
        std::snprintf(code, sizeof code, "E%02d", i);
        p.entities.push_back(code);
        const double f = 0.61 * (i + 1) + 0.83;
        std::vector<double> row;
        for (int t = 0; t < 12; ++t) {
            double v = t >= i ? kCommonPath[t]
                              : std::cos(2.0 * M_PI * f * t / 12.0 +
                                         2.0 * M_PI * i / 12.0 + 0.7);
            if (noise) v += 0.01 * noise->gaussian();
            row.push_back(v);
        }
        p.values.push_back(std::move(row));
    }
    return p;
}

const double kBackbone[8] = {3.0608, 2.8157, 2.2521, 1.8748,
                             1.5333, 1.1528, 0.9693, 0.9049};

double ols_slope(const std::vector<double>& y) {
    const double n = static_cast<double>(y.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        mx += static_cast<double>(i);
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double dx = static_cast<double>(i) - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    return sxy / sxx;
}

bool criterion9() {
    const MetricSpec metric = parse_metric("statistical");

    // noise-free backbone pins the generator and the trend computation
    Panel clean = synthetic_panel(nullptr);
    auto base = trend_series(clean, 5, 1, metric);
    bool ok = check(base.size() == 8, "expected 8 windows");
    for (std::size_t w = 0; w < base.size() && w < 8; ++w)
        ok &= check(std::abs(base[w].value - kBackbone[w]) <= kTolBackbone,
                    "backbone window " + std::to_string(w) + ": " +
                        fmt(base[w].value) + " vs " + fmt(kBackbone[w]));

    Rng root(40993);
    int monotone = 0;
    for (int draw = 0; draw < 100; ++draw) {
        Rng noise = root.derive(static_cast<std::uint64_t>(draw));
        Panel p = synthetic_panel(&noise);
        auto trend = trend_series(p, 5, 1, metric);
        bool decreasing = true;
        for (std::size_t w = 1; w < trend.size(); ++w)
            decreasing &= trend[w].value < trend[w - 1].value;
        monotone += decreasing ? 1 : 0;
    }
    ok &= check(monotone >= 95, "monotone trend in only " +
                                    std::to_string(monotone) + "/100 draws");

    // year-shuffled null: the fitted slope interval must straddle zero
    Rng null_root(71248);
    std::vector<double> slopes;
    for (int draw = 0; draw < 200; ++draw) {
        Rng stream = null_root.derive(static_cast<std::uint64_t>(draw));
        Panel p = synthetic_panel(&stream);
        for (auto& row : p.values) stream.shuffle(row);
        auto trend = trend_series(p, 5, 1, metric);
        std::vector<double> vals;
        for (const auto& pt : trend) vals.push_back(pt.value);
        slopes.push_back(ols_slope(vals));
    }
    std::sort(slopes.begin(), slopes.end());
    const double lo = slopes[4];    // 2.5th percentile of 200
    const double hi = slopes[194];  // 97.5th
    ok &= check(lo < 0.0 && 0.0 < hi,
                "null slope interval [" + fmt(lo) + ", " + fmt(hi) +
                    "] misses zero");

    // and the real panel's slope falls outside that null band
    double real_slope = ols_slope([&] {
        std::vector<double> vals;
        for (const auto& pt : base) vals.push_back(pt.value);
        return vals;
    }());
    ok &= check(real_slope < lo, "real slope " + fmt(real_slope) +
                                     " inside the null band");
    return ok;
}

// ---- criterion 10: CLI reruns are byte-identical ---------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

bool criterion10() {
    const char* cli = std::getenv("ECOCLUST_CLI");
    if (!check(cli != nullptr, "ECOCLUST_CLI is not set")) return false;

    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "ecoclust_accept";
    std::error_code ec;
    fs::remove_all(base, ec);

    auto run = [&](const std::string& args, const fs::path& out) {
        fs::create_directories(out);
        const std::string cmd = std::string(cli) + " " + args + " --out " +
                                out.string() + " >/dev/null 2>&1";
        return std::system(cmd.c_str());
    };

    const std::string mamlp_args =
        "mamlp --from-mlp-table " + fixture("table1_gdp.csv") + " --indicator GDP";
    const std::string trend_args =
        "trend " + fixture("panel_growth.csv") + " --indicator GROWTH --boot-n 400";

    bool ok = true;
    for (int round = 1; round <= 2; ++round) {
        const fs::path dir = base / ("run" + std::to_string(round));
        ok &= check(run(mamlp_args, dir) == 0, "mamlp run failed");
        ok &= check(run(trend_args, dir) == 0, "trend run failed");
    }
    if (!ok) return false;

    const std::vector<std::string> artifacts{
        "GDP_mlp.csv", "GDP_movement_corr.csv", "GDP_clusters.json",
        "GROWTH_trend.csv", "GROWTH_fit.json"};
    for (const auto& name : artifacts) {
        const std::string a = slurp(base / "run1" / name);
        const std::string b = slurp(base / "run2" / name);
        ok &= check(!a.empty(), name + " is empty or missing");
        ok &= check(a == b, name + " differs between reruns");
    }
    return ok;
}

} // namespace

int main() {
    report(1, "movement correlations reproduce the reference matrix", criterion1());
    report(2, "sensitivity rankings match the reference tables", criterion2());
    report(3, "factor graph reproduces the reference clustering", criterion3());
    report(4, "reference partition shows the core clusters and the outlier", criterion4());
    report(5, "spanning tree weight matches exhaustive enumeration", criterion5());
    report(6, "tree ultrametric obeys the strong triangle inequality", criterion6());
    report(7, "decay fit recovers known time constants", criterion7());
    report(8, "shuffled trajectories lose the strong-link structure", criterion8());
    report(9, "windowed pipeline detects a built-in convergence trend", criterion9());
    report(10, "command-line artifacts are byte-identical across reruns", criterion10());

    if (g_failed == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failed);
    return 1;
}
