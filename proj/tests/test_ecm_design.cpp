#include <doctest.h>

#include <random>
#include <sstream>

#include "panelkit/csv.hpp"
#include "panelkit/ecm_design.hpp"

using namespace panelkit;
using namespace panelkit::pmg;

namespace {

PanelDataset synthetic_panel(int n_entities, int n_years, unsigned seed = 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::ostringstream csv;
    csv << "entity,period,z,wti,pbvr,lr\n";
    for (int g = 0; g < n_entities; ++g) {
        for (int y = 0; y < n_years; ++y) {
            csv << 'e' << (g < 10 ? "0" : "") << g << ',' << 2008 + y << ',' << u(rng) << ','
                << u(rng) << ',' << u(rng) << ',' << u(rng) << '\n';
        }
    }
    return load_panel_text(csv.str());
}

ModelSpec base_spec() {
    ModelSpec spec;
    spec.dependent = "z";
    spec.long_run = {"wti", "pbvr"};
    return spec;
}

}  // namespace

TEST_CASE("17x9 ARDL(1,1) design: 17 blocks of 7 rows") {
    PanelDataset panel = synthetic_panel(17, 9);
    ECMDesign design = build_ecm_design(panel, base_spec());
    REQUIRE(design.groups.size() == 17);
    for (const auto& g : design.groups) {
        CHECK(g.n_rows() == 7);
        CHECK(g.x_levels.cols() == 2);
        // w: d.wti, d.pbvr, intercept
        CHECK(g.w.cols() == 3);
        CHECK(g.row_periods.front() == 2010);
        CHECK(g.row_periods.back() == 2016);
    }
    CHECK(design.groups[0].w_names ==
          std::vector<std::string>{"d.wti", "d.pbvr", "c"});
}

TEST_CASE("adding one control adds exactly one short-run column") {
    PanelDataset panel = synthetic_panel(17, 9);
    ModelSpec spec = base_spec();
    spec.short_run_controls = {"lr"};
    ECMDesign design = build_ecm_design(panel, spec);
    for (const auto& g : design.groups) {
        CHECK(g.w.cols() == 4);
        CHECK(g.n_rows() == 7);
    }
    CHECK(design.groups[0].w_names ==
          std::vector<std::string>{"d.wti", "d.pbvr", "d.lr", "c"});
}

TEST_CASE("p=2 adds a lagged dependent difference and costs one row") {
    PanelDataset panel = synthetic_panel(17, 9);
    ModelSpec spec = base_spec();
    spec.p = 2;
    ECMDesign design = build_ecm_design(panel, spec);
    for (const auto& g : design.groups) {
        CHECK(g.n_rows() == 6);
        CHECK(g.w.cols() == 4);  // d.z(-1), d.wti, d.pbvr, c
    }
    CHECK(design.groups[0].w_names[0] == "d.z(-1)");
}

TEST_CASE("design values realize the error-correction columns") {
    PanelDataset panel = synthetic_panel(3, 9, 77);
    ECMDesign design = build_ecm_design(panel, base_spec());
    const auto& g = design.groups[1];
    std::size_t i = 1;
    for (long r = 0; r < g.n_rows(); ++r) {
        std::size_t t = panel.period_index(g.row_periods[static_cast<std::size_t>(r)]);
        CHECK(g.dy[r] == panel.value("z", i, t) - panel.value("z", i, t - 1));
        CHECK(g.z_lag[r] == panel.value("z", i, t - 1));
        CHECK(g.x_levels(r, 0) == panel.value("wti", i, t));
        CHECK(g.x_levels(r, 1) == panel.value("pbvr", i, t));
        CHECK(g.w(r, 0) == panel.value("wti", i, t) - panel.value("wti", i, t - 1));
        CHECK(g.w(r, 2) == 1.0);
    }
}

TEST_CASE("lagged-x convention moves the EC regressors back one period") {
    PanelDataset panel = synthetic_panel(3, 9, 78);
    ModelSpec spec = base_spec();
    spec.ec_lagged_x = true;
    ECMDesign design = build_ecm_design(panel, spec);
    const auto& g = design.groups[0];
    for (long r = 0; r < g.n_rows(); ++r) {
        std::size_t t = panel.period_index(g.row_periods[static_cast<std::size_t>(r)]);
        CHECK(g.x_levels(r, 0) == panel.value("wti", 0, t - 1));
    }
}

TEST_CASE("groups below the parameter threshold are excluded with warnings") {
    std::ostringstream csv;
    csv << "entity,period,z,wti,pbvr\n";
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int y = 0; y < 9; ++y) {
        csv << "full," << 2008 + y << ',' << u(rng) << ',' << u(rng) << ',' << u(rng) << '\n';
    }
    for (int y = 0; y < 4; ++y) {  // 2 usable rows < 5 required
        csv << "short," << 2008 + y << ',' << u(rng) << ',' << u(rng) << ',' << u(rng) << '\n';
    }
    PanelDataset panel = load_panel_text(csv.str());
    ECMDesign design = build_ecm_design(panel, base_spec());
    CHECK(design.groups.size() == 1);
    CHECK(design.groups[0].entity == "full");
    REQUIRE(design.warnings.size() == 1);
    CHECK(design.warnings[0].find("short") != std::string::npos);
}

TEST_CASE("no surviving group is an error") {
    PanelDataset panel = synthetic_panel(2, 4);
    CHECK_THROWS_AS(build_ecm_design(panel, base_spec()), DataError);
}

TEST_CASE("a zero-variance regressor column is an error naming group and column") {
    std::ostringstream csv;
    csv << "entity,period,z,wti,pbvr\n";
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int y = 0; y < 9; ++y) {
        csv << "a," << 2008 + y << ',' << u(rng) << ',' << 0.42 << ',' << u(rng) << '\n';
    }
    PanelDataset panel = load_panel_text(csv.str());
    CHECK_THROWS_WITH_AS(build_ecm_design(panel, base_spec()),
                         doctest::Contains("'wti'"), EstimationError);
}

TEST_CASE("missing interior years shrink the usable block") {
    std::ostringstream csv;
    csv << "entity,period,z,wti,pbvr\n";
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int y = 0; y < 12; ++y) {
        if (y == 6) continue;  // hole in 2014
        csv << "a," << 2008 + y << ',' << u(rng) << ',' << u(rng) << ',' << u(rng) << '\n';
    }
    PanelDataset panel = load_panel_text(csv.str());
    ECMDesign design = build_ecm_design(panel, base_spec());
    // Rows 2010..2019 minus the two rows that need 2014 (2014 itself and 2015).
    CHECK(design.groups[0].n_rows() == 8);
    for (int banned : {2014, 2015}) {
        for (int p : design.groups[0].row_periods) CHECK(p != banned);
    }
}

TEST_CASE("spec validation rejects bad shapes") {
    ModelSpec spec;
    spec.dependent = "z";
    CHECK_THROWS_AS(spec.validate(), UsageError);  // empty long-run
    spec.long_run = {"z"};
    CHECK_THROWS_AS(spec.validate(), UsageError);  // dependent among regressors
    spec.long_run = {"x"};
    spec.p = 0;
    CHECK_THROWS_AS(spec.validate(), UsageError);
}
