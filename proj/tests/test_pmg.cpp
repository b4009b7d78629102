#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "panelkit/dgp.hpp"
#include "panelkit/pmg.hpp"

using namespace panelkit;
using namespace panelkit::pmg;

namespace {

ModelSpec generic_spec(int k = 2) {
    ModelSpec spec;
    spec.dependent = "z";
    for (int j = 1; j <= k; ++j) spec.long_run.push_back("x" + std::to_string(j));
    return spec;
}

sim::DGPParams noise_free_params(std::uint64_t seed = 4242) {
    sim::DGPParams p;
    p.n_groups = 17;
    p.n_periods = 40;
    p.theta_true = {0.5, -0.3};
    p.noise_sd = 0.0;
    p.seed = seed;
    return p;
}

}  // namespace

TEST_CASE("noise-free DGP: theta recovered to 1e-6") {
    PanelDataset panel = sim::simulate_ecm_panel(noise_free_params());
    ECMDesign design = build_ecm_design(panel, generic_spec());
    PMGResult fit = estimate_pmg(design);
    CHECK(fit.converged);
    CHECK(std::abs(fit.theta[0] - 0.5) < 1e-6);
    CHECK(std::abs(fit.theta[1] + 0.3) < 1e-6);
    for (const auto& g : fit.groups) CHECK(g.rho < 0.0);
}

TEST_CASE("single group: PMG equals the OLS-implied long-run ratio") {
    sim::DGPParams p = noise_free_params(99);
    p.n_groups = 1;
    p.noise_sd = 0.25;
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());
    PMGResult fit = estimate_pmg(design);
    GroupFit ols_fit = group_ardl_ols(design.groups[0], design.spec);
    const double phi = ols_fit.coef[0];
    for (long j = 0; j < 2; ++j) {
        double implied = -ols_fit.coef[1 + j] / phi;
        CHECK(std::abs(fit.theta[j] - implied) < 1e-8);
    }
    CHECK(fit.rho_mean == doctest::Approx(phi).epsilon(1e-7));
}

TEST_CASE("analytic score matches central finite differences") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int round = 0; round < 12; ++round) {
        sim::DGPParams p = noise_free_params(1000 + static_cast<std::uint64_t>(round));
        p.n_groups = 6;
        p.n_periods = 24;
        p.noise_sd = 0.3;
        PanelDataset panel = sim::simulate_ecm_panel(p);
        ECMDesign design = build_ecm_design(panel, generic_spec());
        Eigen::VectorXd theta(2);
        theta << u(rng), u(rng);
        Eigen::VectorXd analytic = concentrated_score(theta, design);
        const double h = 1e-5;
        for (long j = 0; j < 2; ++j) {
            Eigen::VectorXd tp = theta, tm = theta;
            tp[j] += h;
            tm[j] -= h;
            double fd =
                (concentrated_loglik(tp, design) - concentrated_loglik(tm, design)) / (2 * h);
            double rel = std::abs(analytic[j] - fd) / std::max(1.0, std::abs(fd));
            CHECK(rel < 1e-6);
        }
    }
}

TEST_CASE("doubling the data shifts the log-likelihood by -sum(T_i) ln 2") {
    sim::DGPParams p = noise_free_params(77);
    p.n_groups = 5;
    p.n_periods = 20;
    p.noise_sd = 0.2;
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());

    ECMDesign doubled = design;
    double total_T = 0.0;
    for (auto& g : doubled.groups) {
        g.dy *= 2.0;
        g.z_lag *= 2.0;
        g.x_levels *= 2.0;
        for (long c = 0; c + 1 < g.w.cols(); ++c) g.w.col(c) *= 2.0;  // intercept stays
        total_T += static_cast<double>(g.n_rows());
    }
    Eigen::VectorXd theta(2);
    theta << 0.4, -0.2;
    double base = concentrated_loglik(theta, design);
    double shifted = concentrated_loglik(theta, doubled);
    CHECK(shifted - base == doctest::Approx(-total_T * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("log-likelihood is locally maximal at the PMG optimum") {
    sim::DGPParams p = noise_free_params(555);
    p.noise_sd = 0.15;
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());
    PMGResult fit = estimate_pmg(design);
    double at_opt = concentrated_loglik(fit.theta, design);
    CHECK(at_opt == doctest::Approx(fit.log_likelihood).epsilon(1e-10));
    std::mt19937_64 rng(3);
    std::normal_distribution<double> d(0.0, 1.0);
    for (int k = 0; k < 30; ++k) {
        Eigen::VectorXd delta(2);
        delta << d(rng), d(rng);
        delta *= 1e-3 / delta.norm();
        CHECK(concentrated_loglik(fit.theta + delta, design) <= at_opt + 1e-12);
    }
}

TEST_CASE("empty design and zero-dimension errors") {
    ECMDesign empty;
    empty.long_run_names = {"x1"};
    Eigen::VectorXd theta(1);
    theta << 0.1;
    CHECK_THROWS_AS(concentrated_loglik(theta, empty), EstimationError);
    CHECK_THROWS_AS(estimate_pmg(empty), EstimationError);
}

TEST_CASE("shifting a long-run regressor leaves theta and loglik unchanged") {
    sim::DGPParams p = noise_free_params(808);
    p.noise_sd = 0.2;
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());
    PMGResult base = estimate_pmg(design);

    ECMDesign shifted = design;
    for (auto& g : shifted.groups) {
        g.x_levels.col(0).array() += 5.0;  // differences in w are unaffected by a constant
    }
    PMGResult moved = estimate_pmg(shifted);
    CHECK(moved.log_likelihood == doctest::Approx(base.log_likelihood).epsilon(1e-8));
    CHECK(moved.theta[0] == doctest::Approx(base.theta[0]).epsilon(1e-6));
    CHECK(moved.theta[1] == doctest::Approx(base.theta[1]).epsilon(1e-6));
}

TEST_CASE("group_ardl_ols: exact data, oracle match, rank deficiency") {
    // Exact linear relation: zero residual variance and exact coefficients.
    GroupDesign g;
    g.entity = "unit";
    const long T = 12;
    g.dy.resize(T);
    g.z_lag.resize(T);
    g.x_levels.resize(T, 1);
    g.w.resize(T, 2);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (long t = 0; t < T; ++t) {
        g.z_lag[t] = u(rng);
        g.x_levels(t, 0) = u(rng);
        g.w(t, 0) = u(rng);
        g.w(t, 1) = 1.0;
        g.dy[t] = -0.5 * g.z_lag[t] + 0.25 * g.x_levels(t, 0) + 0.1 * g.w(t, 0) + 0.3;
    }
    g.w_names = {"d.x1", "c"};
    ModelSpec spec;
    spec.dependent = "z";
    spec.long_run = {"x1"};
    GroupFit fit = group_ardl_ols(g, spec);
    CHECK(fit.coef[0] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(fit.coef[1] == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(fit.coef[2] == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(fit.coef[3] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(fit.sigma2 == doctest::Approx(0.0).epsilon(1e-12));

    // Oracle: explicit normal equations on a noisy copy.
    GroupDesign noisy = g;
    for (long t = 0; t < T; ++t) noisy.dy[t] += 0.05 * u(rng);
    GroupFit fit2 = group_ardl_ols(noisy, spec);
    Eigen::MatrixXd x(T, 4);
    x.col(0) = noisy.z_lag;
    x.col(1) = noisy.x_levels.col(0);
    x.col(2) = noisy.w.col(0);
    x.col(3) = noisy.w.col(1);
    Eigen::VectorXd beta = (x.transpose() * x).inverse() * (x.transpose() * noisy.dy);
    for (long j = 0; j < 4; ++j) {
        CHECK(fit2.coef[j] == doctest::Approx(beta[j]).epsilon(1e-10));
    }

    // Duplicated regressor: rank deficiency reported with the column name.
    GroupDesign dup = g;
    dup.x_levels.conservativeResize(T, 2);
    dup.x_levels.col(1) = dup.z_lag;
    ModelSpec spec2 = spec;
    spec2.long_run = {"x1", "x_dup"};
    CHECK_THROWS_AS(group_ardl_ols(dup, spec2), EstimationError);
}

TEST_CASE("identical groups: MG equals the single-group fit and PMG long run") {
    sim::DGPParams p = noise_free_params(31337);
    p.n_groups = 1;
    p.noise_sd = 0.2;
    PanelDataset one = sim::simulate_ecm_panel(p);

    // Stack the same group five times.
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    PanelDataset stacked(names, one.periods());
    for (const auto& v : one.variable_names()) {
        stacked.add_variable(v);
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t t = 0; t < one.n_periods(); ++t) {
                if (one.is_present(v, 0, t)) stacked.set(v, i, t, one.value(v, 0, t));
            }
        }
    }
    ECMDesign design = build_ecm_design(stacked, generic_spec());
    MGResult mg = estimate_mg(design);
    PMGResult pmg_fit = estimate_pmg(design);
    GroupFit single = group_ardl_ols(design.groups[0], design.spec);
    for (long j = 0; j < 2; ++j) {
        double implied = -single.coef[1 + j] / single.coef[0];
        CHECK(mg.theta_mean[j] == doctest::Approx(implied).epsilon(1e-10));
        CHECK(pmg_fit.theta[j] == doctest::Approx(implied).epsilon(1e-6));
    }
    CHECK(mg.rho_mean == doctest::Approx(single.coef[0]).epsilon(1e-10));
}

TEST_CASE("noise-free homogeneous DGP: MG equals PMG to 1e-6") {
    sim::DGPParams p = noise_free_params(2024);
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());
    MGResult mg = estimate_mg(design);
    PMGResult fit = estimate_pmg(design);
    for (long j = 0; j < 2; ++j) {
        CHECK(std::abs(mg.theta_mean[j] - fit.theta[j]) < 1e-6);
    }
}

TEST_CASE("heterogeneous theta: MG recovers the average") {
    // Build two blocks with different long-run vectors by simulating two
    // panels and renaming entities; MG averages the per-group ratios.
    sim::DGPParams pa = noise_free_params(11);
    pa.n_groups = 6;
    pa.theta_true = {0.8, -0.1};
    sim::DGPParams pb = noise_free_params(12);
    pb.n_groups = 6;
    pb.theta_true = {0.2, -0.5};
    PanelDataset a = sim::simulate_ecm_panel(pa);
    PanelDataset b = sim::simulate_ecm_panel(pb);

    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) names.push_back("u" + std::to_string(10 + i));
    PanelDataset merged(names, a.periods());
    for (const auto& v : a.variable_names()) {
        merged.add_variable(v);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t t = 0; t < a.n_periods(); ++t) {
                merged.set(v, i, t, a.value(v, i, t));
                merged.set(v, i + 6, t, b.value(v, i, t));
            }
        }
    }
    ECMDesign design = build_ecm_design(merged, generic_spec());
    MGResult mg = estimate_mg(design);
    CHECK(mg.theta_mean[0] == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(mg.theta_mean[1] == doctest::Approx(-0.3).epsilon(1e-6));
}

TEST_CASE("star assignment follows the two-sided normal cutoffs") {
    CHECK(significance_stars(2.6, 1.0) == "***");
    CHECK(significance_stars(-2.6, 1.0) == "***");
    CHECK(significance_stars(2.0, 1.0) == "**");
    CHECK(significance_stars(1.7, 1.0) == "*");
    CHECK(significance_stars(1.0, 1.0) == "");
    CHECK(significance_stars(10.50, 10.50 / 2.8) == "***");
    CHECK(significance_stars(0.5, kNaN) == "");
}

TEST_CASE("perfect fit in a group is an explicit error") {
    sim::DGPParams p = noise_free_params(64);
    p.n_groups = 3;
    PanelDataset panel = sim::simulate_ecm_panel(p);
    ECMDesign design = build_ecm_design(panel, generic_spec());
    Eigen::VectorXd theta_true(2);
    theta_true << 0.5, -0.3;
    // At the exact generating vector a zero-noise group fits perfectly.
    CHECK_THROWS_WITH_AS(concentrated_loglik(theta_true, design),
                         doctest::Contains("perfect fit"), EstimationError);
}
