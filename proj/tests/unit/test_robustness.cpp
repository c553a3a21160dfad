#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/io.hpp"
#include "core/robustness.hpp"

using namespace ecoclust;

namespace {

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("ECOCLUST_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ok;
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("distance stack mirrors the per-window matrices") {
    Panel p = load_panel(fixture("panel_growth.csv"), PanelKind::growth_rates, "G");
    MetricSpec metric = parse_metric("statistical");
    DistanceStack s = distance_stack(p, 5, 1, metric);
    auto wins = make_windows(p, 5, 1);
    REQUIRE(s.matrices.size() == wins.size());
    REQUIRE(s.window_labels.size() == wins.size());
    CHECK(s.window_labels[3] == wins[3].label);
    LabeledMatrix direct = distance_matrix(p, wins[3], metric).dist;
    for (std::size_t i = 0; i < direct.n(); ++i)
        for (std::size_t j = 0; j < direct.n(); ++j)
            CHECK(s.matrices[3].at(i, j) == direct.at(i, j));

    CHECK(stack_trend(s).size() == wins.size());
}

TEST_CASE("stack shuffle permutes each pair slot across windows only") {
    Panel p = load_panel(fixture("panel_growth.csv"), PanelKind::growth_rates, "G");
    DistanceStack s = distance_stack(p, 5, 1, parse_metric("statistical"));
    Rng rng(99);
    DistanceStack sh = shuffle_distance_stack(s, rng);
    REQUIRE(sh.matrices.size() == s.matrices.size());
    const std::size_t n = s.matrices[0].n();
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<double> before, after;
            for (std::size_t w = 0; w < s.matrices.size(); ++w) {
                before.push_back(s.matrices[w].at(i, j));
                after.push_back(sh.matrices[w].at(i, j));
                // symmetry and zero diagonal survive
                CHECK(sh.matrices[w].at(j, i) == sh.matrices[w].at(i, j));
                CHECK(sh.matrices[w].at(i, i) == 0.0);
            }
            if (before != after) moved = true;
            CHECK(sorted(before) == sorted(after));
        }
    CHECK(moved);

    // replay with the same seed
    Rng rng2(99);
    DistanceStack sh2 = shuffle_distance_stack(s, rng2);
    for (std::size_t w = 0; w < sh.matrices.size(); ++w)
        CHECK(sh.matrices[w].v == sh2.matrices[w].v);

    DistanceStack one;
    one.window_labels = {"93-97"};
    one.matrices = {s.matrices[0]};
    Rng r3(1);
    CHECK(code_of([&] { shuffle_distance_stack(one, r3); }) == ErrorCode::insufficient);
}

TEST_CASE("stack shuffle report compares shuffled to real variation") {
    Panel p = load_panel(fixture("panel_growth.csv"), PanelKind::growth_rates, "G");
    DistanceStack s = distance_stack(p, 5, 1, parse_metric("statistical"));
    StackShuffleReport rep = stack_shuffle_report(s, 7);
    CHECK(rep.seed == 7);
    CHECK(rep.real_variation > 0);
    CHECK(rep.shuffled_amplitude > 0);
    CHECK(rep.ratio == doctest::Approx(rep.shuffled_amplitude / rep.real_variation));
    StackShuffleReport rep2 = stack_shuffle_report(s, 7);
    CHECK(rep.shuffled_amplitude == rep2.shuffled_amplitude);
}

TEST_CASE("mlp table shuffles preserve the right multisets") {
    MlpTable t = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    SUBCASE("rows: each entity keeps its own values") {
        Rng rng(5);
        MlpTable sh = shuffle_mlp_table(t, ShuffleAxis::rows, rng);
        for (std::size_t e = 0; e < t.n_entities(); ++e)
            CHECK(sorted(sh.values[e]) == sorted(t.values[e]));
    }
    SUBCASE("columns: each window keeps its own values") {
        Rng rng(5);
        MlpTable sh = shuffle_mlp_table(t, ShuffleAxis::columns, rng);
        for (std::size_t w = 0; w < t.n_windows(); ++w) {
            std::vector<double> before, after;
            for (std::size_t e = 0; e < t.n_entities(); ++e) {
                before.push_back(t.values[e][w]);
                after.push_back(sh.values[e][w]);
            }
            CHECK(sorted(before) == sorted(after));
        }
    }
    SUBCASE("both: only the grand multiset survives") {
        Rng rng(5);
        MlpTable sh = shuffle_mlp_table(t, ShuffleAxis::both, rng);
        std::vector<double> before, after;
        for (std::size_t e = 0; e < t.n_entities(); ++e)
            for (std::size_t w = 0; w < t.n_windows(); ++w) {
                before.push_back(t.values[e][w]);
                after.push_back(sh.values[e][w]);
            }
        CHECK(sorted(before) == sorted(after));
        // double shuffle really does move mass across both axes
        bool row_broken = false;
        for (std::size_t e = 0; e < t.n_entities() && !row_broken; ++e)
            if (sorted(sh.values[e]) != sorted(t.values[e])) row_broken = true;
        CHECK(row_broken);
    }
    SUBCASE("same seed, same permutation") {
        Rng r1(11), r2(11);
        MlpTable a = shuffle_mlp_table(t, ShuffleAxis::both, r1);
        MlpTable b = shuffle_mlp_table(t, ShuffleAxis::both, r2);
        CHECK(a.values == b.values);
    }
}

TEST_CASE("mlp shuffle report is consistent with the shuffled table it describes") {
    MlpTable t = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    MlpShuffleReport rep = mlp_shuffle_report(t, ShuffleAxis::both, 17, 0.9, -0.5);
    CHECK(rep.seed == 17);

    Rng rng(17);
    MlpTable sh = shuffle_mlp_table(t, ShuffleAxis::both, rng);
    MovementCorrelations mc = movement_correlations(sh, ConstantRowPolicy::skip);
    double cmax = -2, cmin = 2;
    for (std::size_t i = 0; i < mc.corr.n(); ++i)
        for (std::size_t j = i + 1; j < mc.corr.n(); ++j) {
            cmax = std::max(cmax, mc.corr.at(i, j));
            cmin = std::min(cmin, mc.corr.at(i, j));
        }
    CHECK(rep.c_max == doctest::Approx(cmax).epsilon(1e-14));
    CHECK(rep.c_min == doctest::Approx(cmin).epsilon(1e-14));
    StrongLinks sl = strong_links(mc.corr, 0.9, -0.5);
    CHECK(rep.strong_links ==
          static_cast<int>(sl.positive.size() + sl.negative.size()));
}

TEST_CASE("randomization summary census") {
    MlpTable t = load_mlp_table_csv(fixture("table1_gdp.csv"), "GDP");
    RandomizationSummary s = randomization_summary(t, ShuffleAxis::both, 20, 500, 0.9, -0.5);
    REQUIRE(s.runs.size() == 20);
    CHECK(s.runs[0].seed == 500);
    CHECK(s.runs[19].seed == 519);
    // real counts agree with a direct census
    MovementCorrelations mc = movement_correlations(t, ConstantRowPolicy::skip);
    StrongLinks sl = strong_links(mc.corr, 0.9, -0.5);
    CHECK(s.real_positive == static_cast<int>(sl.positive.size()));
    CHECK(s.real_negative == static_cast<int>(sl.negative.size()));
    CHECK(s.fraction_zero_strong >= 0.0);
    CHECK(s.fraction_zero_strong <= 1.0);
    // each run is the matching single-seed report
    MlpShuffleReport rep = mlp_shuffle_report(t, ShuffleAxis::both, 503, 0.9, -0.5);
    CHECK(s.runs[3].positive + s.runs[3].negative == rep.strong_links);

    CHECK(code_of([&] {
        randomization_summary(t, ShuffleAxis::both, 0, 1, 0.9, -0.5);
    }) == ErrorCode::input);
}
