#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "panelkit/csv.hpp"
#include "panelkit/replicate.hpp"

using namespace panelkit;
using namespace panelkit::report;

namespace {

PanelDataset tiny_panel() {
    return load_panel_text(
        "entity,period,a,b,c\n"
        "e1,2000,1,2,\n"
        "e1,2001,2,1,\n"
        "e1,2002,3,0,\n"
        "e2,2000,4,8,7\n"
        "e2,2001,5,9,\n"
        "e2,2002,6,10,\n");
}

}  // namespace

TEST_CASE("summary stats: hand arithmetic, all-missing, single value") {
    PanelDataset p = load_panel_text(
        "entity,period,v,w,empty\n"
        "e,2000,1,5,\n"
        "e,2001,2,,\n"
        "e,2002,3,,\n");
    SummaryStats s = summary_stats(p);
    const VariableSummary* v = nullptr;
    const VariableSummary* w = nullptr;
    const VariableSummary* empty = nullptr;
    for (const auto& row : s.rows) {
        if (row.name == "v") v = &row;
        if (row.name == "w") w = &row;
        if (row.name == "empty") empty = &row;
    }
    REQUIRE(v);
    CHECK(v->mean == doctest::Approx(2.0));
    CHECK(v->sd == doctest::Approx(1.0));
    CHECK(v->min == 1.0);
    CHECK(v->max == 3.0);
    REQUIRE(w);
    CHECK(w->n_obs == 1);
    CHECK(std::isnan(w->sd));  // undefined with a single value
    REQUIRE(empty);
    CHECK(empty->n_obs == 0);
    CHECK(std::isnan(empty->mean));

    std::string text = emit_summary_table(s, OutputFormat::Text);
    CHECK(text.find("Mean") != std::string::npos);
    std::string csv = emit_summary_table(s, OutputFormat::Csv);
    CHECK(csv.find("v,3,2,1,1,3") != std::string::npos);
}

TEST_CASE("correlation matrix: diagonal, perfect anticorrelation, naive oracle") {
    PanelDataset p = tiny_panel();
    CorrelationMatrix cm = correlation_matrix(p);
    auto idx = [&](const std::string& n) {
        for (std::size_t i = 0; i < cm.names.size(); ++i) {
            if (cm.names[i] == n) return static_cast<long>(i);
        }
        return -1L;
    };
    CHECK(cm.r(idx("a"), idx("a")) == 1.0);
    // e1's b runs exactly opposite a over its observed stretch; pooled with
    // e2 the correlation is computed over all 6 complete pairs.
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    double av[6] = {1, 2, 3, 4, 5, 6};
    double bv[6] = {2, 1, 0, 8, 9, 10};
    for (int k = 0; k < 6; ++k) {
        sx += av[k];
        sy += bv[k];
        sxx += av[k] * av[k];
        syy += bv[k] * bv[k];
        sxy += av[k] * bv[k];
    }
    double expected = (sxy - sx * sy / 6) /
                      std::sqrt((sxx - sx * sx / 6) * (syy - sy * sy / 6));
    CHECK(cm.r(idx("a"), idx("b")) == doctest::Approx(expected).epsilon(1e-12));
    // c has a single observation: footnoted missing cells.
    CHECK(std::isnan(cm.r(idx("a"), idx("c"))));
    CHECK(!cm.footnotes.empty());

    PanelDataset anti = load_panel_text(
        "entity,period,x,y\n"
        "e,2000,1,-1\n"
        "e,2001,2,-2\n"
        "e,2002,5,-5\n");
    CorrelationMatrix am = correlation_matrix(anti);
    CHECK(am.r(1, 0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("star rendering in estimation tables") {
    EstimationCell cell;
    cell.variant = "returns";
    cell.model_number = 1;
    cell.spec.dependent = "z1";
    cell.spec.long_run = {"wti", "pbvr"};
    pmg::PMGResult r;
    r.long_run_names = {"wti", "pbvr"};
    r.theta.resize(2);
    r.theta << 10.50, 0.37;
    r.theta_se.resize(2);
    r.theta_se << 10.50 / 3.0, 0.37 / 0.6745;  // p<0.01 and p~0.5
    r.theta_cov = Eigen::MatrixXd::Zero(2, 2);
    r.short_run_names = {"rho", "d.wti", "c"};
    r.rho_mean = -0.797;
    r.rho_mean_se = 0.05;
    r.short_run_mean.resize(2);
    r.short_run_mean << -2.245, 7.713;
    r.short_run_mean_se.resize(2);
    r.short_run_mean_se << 5.0, 30.0;
    r.log_likelihood = -453.3;
    r.converged = true;
    cell.result = r;

    std::string text = emit_estimation_table(cell, OutputFormat::Text);
    CHECK(text.find("10.5***") != std::string::npos);
    CHECK(text.find("0.37*") == std::string::npos);  // |t| = 0.6745: no stars
    CHECK(text.find("0.37") != std::string::npos);
    CHECK(text.find("rho_i") != std::string::npos);
    CHECK(text.find("-0.797***") != std::string::npos);
    CHECK(text.find("Log Likelihood -453.3") != std::string::npos);
    CHECK(text.find("indicates significance at 1%, 5% and 10%") != std::string::npos);

    std::string csv = emit_estimation_table(cell, OutputFormat::Csv);
    CHECK(csv.find("long_run,wti,10.5,3.5,***") != std::string::npos);

    // JSON round-trip keeps bit-exact numbers.
    auto j = nlohmann::json::parse(emit_estimation_table(cell, OutputFormat::Json));
    CHECK(j["long_run"][0]["estimate"].get<double>() == 10.50);
    CHECK(j["short_run"][0]["estimate"].get<double>() == -0.797);
    CHECK(j["log_likelihood"].get<double>() == -453.3);
}

TEST_CASE("failed cells render a structured failure record") {
    EstimationCell cell;
    cell.variant = "negative";
    cell.model_number = 4;
    cell.control = "lr";
    cell.failure = "PMG did not converge in 500 iterations";
    std::string text = emit_estimation_table(cell, OutputFormat::Text);
    CHECK(text.find("estimation failed") != std::string::npos);
    auto j = nlohmann::json::parse(emit_estimation_table(cell, OutputFormat::Json));
    CHECK(j["failure"].get<std::string>() == cell.failure);
}

TEST_CASE("config: file grammar, overrides, hashing") {
    RunConfig c = RunConfig::from_text(
        "# comment\n"
        "simulate = replication\n"
        "zscore = yeyati\n"
        "shocks = returns, negative\n"
        "models = 1-3,5\n"
        "seed = 42\n"
        "format = text,json\n");
    CHECK(c.simulate_mode == "replication");
    CHECK(c.dependent() == "z2");
    CHECK(c.shock_variants == std::vector<std::string>{"returns", "negative"});
    CHECK(c.models == std::vector<int>{1, 2, 3, 5});
    CHECK(c.seed == 42);
    CHECK(c.formats.size() == 2);
    c.validate();

    RunConfig d = c;
    CHECK(c.hash() == d.hash());
    d.apply_kv("seed", "43");
    CHECK(c.hash() != d.hash());

    CHECK_THROWS_AS(RunConfig::from_text("nonsense\n"), UsageError);
    CHECK_THROWS_AS(RunConfig::from_text("unknown_key = 1\n"), UsageError);
    CHECK_THROWS_AS(RunConfig::from_text("zscore = other\n"), UsageError);
    RunConfig both;
    both.input_path = "x.csv";
    both.simulate_mode = "ecm";
    CHECK_THROWS_AS(both.validate(), UsageError);
}

TEST_CASE("grid specs follow the frozen model numbering") {
    RunConfig c;
    c.simulate_mode = "replication";
    pmg::ModelSpec m1 = grid_spec(c, "returns", 1);
    CHECK(m1.dependent == "z1");
    CHECK(m1.long_run == std::vector<std::string>{"wti", "pbvr"});
    CHECK(m1.short_run_controls.empty());
    pmg::ModelSpec m4 = grid_spec(c, "positive", 4);
    CHECK(m4.long_run[0] == "wti_pos");
    CHECK(m4.short_run_controls == std::vector<std::string>{"lr"});
    pmg::ModelSpec m9 = grid_spec(c, "negative", 9);
    CHECK(m9.long_run[0] == "wti_neg");
    CHECK(m9.short_run_controls == std::vector<std::string>{"cpi"});
    CHECK_THROWS_AS(grid_spec(c, "returns", 10), UsageError);
}

TEST_CASE("derive step registers roa, z-scores and shock series") {
    std::ostringstream csv;
    csv << "entity,period,car,ni,assets,price\n";
    double price[10] = {60, 65, 58, 62, 70, 66, 61, 72, 75, 68};
    for (int g = 0; g < 2; ++g) {
        for (int t = 0; t < 10; ++t) {
            csv << 'e' << g << ',' << 2000 + t << ',' << 0.1 + 0.01 * ((t + g) % 3) << ','
                << 2.0 + 0.2 * ((t * (g + 2)) % 5) << ',' << 40.0 + t << ',' << price[t]
                << '\n';
        }
    }
    PanelDataset panel = load_panel_text(csv.str());
    RunConfig c;
    c.simulate_mode = "ecm";
    c.derive_car = "car";
    c.derive_net_income = "ni";
    c.derive_total_assets = "assets";
    c.derive_price = "price";
    apply_derivations(panel, c);
    for (const char* v : {"roa", "z1", "z2", "wti", "wti_pos", "wti_neg"}) {
        CHECK(panel.has_variable(v));
    }
    // Spot-check: the oil return series matches the hand ratio.
    CHECK(panel.value("wti", 0, 1) == doctest::Approx(std::log(65.0 / 60.0)).epsilon(1e-12));
    // Shocks derived from a shared price are cross-section invariant.
    CHECK(panel.cross_section_invariant("wti_pos"));
}

TEST_CASE("mc report rendering carries rates in all formats") {
    sim::MonteCarloReport mc;
    mc.procedure = "cd_size";
    mc.reps = 10;
    mc.rejection_rates = {{"pesaran_cd", 0.05}};
    CHECK(emit_mc_report(mc, OutputFormat::Text).find("pesaran_cd") != std::string::npos);
    CHECK(emit_mc_report(mc, OutputFormat::Csv).find("rejection_rate,pesaran_cd,0.05") !=
          std::string::npos);
    auto j = nlohmann::json::parse(emit_mc_report(mc, OutputFormat::Json));
    CHECK(j["rejection_rates_5pct"]["pesaran_cd"].get<double>() == 0.05);
}
