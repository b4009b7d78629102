#include <doctest.h>

#include <cmath>
#include <random>

#include "panelkit/unit_root.hpp"

using namespace panelkit;
using namespace panelkit::diag;

namespace {

// Deterministic LCG series; the reference t statistics and p-values below were
// computed once from the same bytes with an independent implementation
// (statsmodels adfuller, maxlag=1, autolag=None) and frozen.
std::vector<double> lcg_series(int n, bool walk) {
    std::vector<double> y(static_cast<std::size_t>(n));
    long long state = 1;
    double level = 0.0;
    for (int t = 0; t < n; ++t) {
        state = (state * 1103515245LL + 12345LL) % 2147483648LL;
        double u = static_cast<double>(state % 65536LL) / 65536.0 - 0.5;
        level = walk ? level + u : u;
        y[static_cast<std::size_t>(t)] = level;
    }
    return y;
}

PanelMatrix identical_panel(const std::vector<double>& y, std::size_t n) {
    PanelMatrix pm(n, y.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < y.size(); ++t) pm.set(i, t, y[t]);
    }
    return pm;
}

PanelMatrix random_walk_panel(std::mt19937_64& rng, std::size_t n, std::size_t t) {
    std::normal_distribution<double> d(0.0, 1.0);
    PanelMatrix pm(n, t);
    for (std::size_t i = 0; i < n; ++i) {
        double level = 0.0;
        for (std::size_t u = 0; u < t; ++u) {
            level += d(rng);
            pm.set(i, u, level);
        }
    }
    return pm;
}

}  // namespace

TEST_CASE("adf t statistics match the frozen reference values") {
    UnitRootSpec spec;
    spec.fixed_lag = 1;

    AdfResult walk_c = adf_test(lcg_series(30, true), spec);
    CHECK(walk_c.n_obs == 28);
    CHECK(walk_c.t_stat == doctest::Approx(-2.6251588903114036).epsilon(1e-10));
    // The finite-sample p-value sits near the asymptotic-surface reference.
    CHECK(walk_c.p_value == doctest::Approx(0.08790811657754055).epsilon(0.35));

    AdfResult stat_c = adf_test(lcg_series(30, false), spec);
    CHECK(stat_c.t_stat == doctest::Approx(-1.989197683792971).epsilon(1e-10));
    CHECK(stat_c.p_value == doctest::Approx(0.29132953171883397).epsilon(0.25));

    spec.deterministic = Deterministic::ConstantAndTrend;
    AdfResult walk_ct = adf_test(lcg_series(30, true), spec);
    CHECK(walk_ct.t_stat == doctest::Approx(1.2728276570515638).epsilon(1e-10));
    CHECK(walk_ct.p_value > 0.99);

    AdfResult stat_ct = adf_test(lcg_series(30, false), spec);
    CHECK(stat_ct.t_stat == doctest::Approx(-3.160828043139335).epsilon(1e-10));
    CHECK(stat_ct.p_value == doctest::Approx(0.0924935222579174).epsilon(0.35));
}

TEST_CASE("the asymptotic response surface reproduces its reference p-values") {
    // Reference values computed once from an independent implementation of
    // the same MacKinnon surface and frozen.
    CHECK(mackinnon_pvalue(-2.6251588903114036, Deterministic::Constant) ==
          doctest::Approx(0.08790811657754055).epsilon(1e-8));
    CHECK(mackinnon_pvalue(-1.989197683792971, Deterministic::Constant) ==
          doctest::Approx(0.29132953171883397).epsilon(1e-8));
    CHECK(mackinnon_pvalue(-3.160828043139335, Deterministic::ConstantAndTrend) ==
          doctest::Approx(0.0924935222579174).epsilon(1e-8));
    CHECK(mackinnon_pvalue(1.2728276570515638, Deterministic::ConstantAndTrend) == 1.0);
}

TEST_CASE("finite-sample p-values are near uniform under the null") {
    std::mt19937_64 rng(2026);
    std::normal_distribution<double> d(0.0, 1.0);
    UnitRootSpec spec;
    const int reps = 600;
    int below_10 = 0, below_50 = 0;
    for (int r = 0; r < reps; ++r) {
        std::vector<double> y(30);
        double level = 0.0;
        for (int t = 0; t < 30; ++t) {
            level += d(rng);
            y[static_cast<std::size_t>(t)] = level;
        }
        double p = adf_test(y, spec).p_value;
        below_10 += p <= 0.10;
        below_50 += p <= 0.50;
    }
    CHECK(below_10 > reps * 0.06);
    CHECK(below_10 < reps * 0.15);
    CHECK(below_50 > reps * 0.42);
    CHECK(below_50 < reps * 0.58);
}

TEST_CASE("adf rejects stationary noise and keeps random walks at long T") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> d(0.0, 1.0);
    std::vector<double> noise(200), walk(200);
    double level = 0.0;
    for (int t = 0; t < 200; ++t) {
        noise[static_cast<std::size_t>(t)] = d(rng);
        level += d(rng);
        walk[static_cast<std::size_t>(t)] = level;
    }
    UnitRootSpec spec;
    CHECK(adf_test(noise, spec).p_value < 0.01);
    CHECK(adf_test(walk, spec).p_value > 0.05);
}

TEST_CASE("adf with too short a series throws") {
    UnitRootSpec spec;
    spec.fixed_lag = 1;
    CHECK_THROWS_AS(adf_test({1.0, 2.0, 1.5, 2.5, 2.0}, spec), DataError);
}

TEST_CASE("ic lag selection stays within bounds") {
    UnitRootSpec spec;
    spec.ic_selection = true;
    spec.max_lags = 4;
    AdfResult r = adf_test(lcg_series(60, true), spec);
    CHECK(r.lags >= 0);
    CHECK(r.lags <= 4);
}

TEST_CASE("phillips-perron equals dickey-fuller at bandwidth zero") {
    UnitRootSpec adf_spec;
    adf_spec.fixed_lag = 0;
    UnitRootSpec pp_spec;
    pp_spec.pp_bandwidth = 0;
    auto y = lcg_series(40, true);
    AdfResult a = adf_test(y, adf_spec);
    AdfResult p = pp_test(y, pp_spec);
    CHECK(p.t_stat == doctest::Approx(a.t_stat).epsilon(1e-12));
    // With an explicit bandwidth the p-value comes from the asymptotic surface.
    CHECK(p.p_value ==
          doctest::Approx(mackinnon_pvalue(a.t_stat, Deterministic::Constant)).epsilon(1e-12));
}

TEST_CASE("phillips-perron default bandwidth follows the Newey-West rule") {
    UnitRootSpec spec;
    auto y = lcg_series(31, true);  // 30 regression rows
    AdfResult r = pp_test(y, spec);
    CHECK(r.lags == 3);  // floor(4 * (30/100)^(2/9))
    CHECK(std::isfinite(r.t_stat));
}

TEST_CASE("llc on a single entity matches its own building blocks") {
    auto y = lcg_series(40, true);
    PanelMatrix pm = identical_panel(y, 1);
    UnitRootSpec spec;
    TestResult r = llc_test(pm, spec);
    double t_delta = kNaN, mu_star = kNaN, sigma_star = kNaN, s_bar = kNaN, t_tilde = kNaN,
           pooled_delta = kNaN, entity_delta = kNaN, std_delta = kNaN, s2_pooled = kNaN;
    for (const auto& [k, v] : r.detail) {
        if (k == "t_delta") t_delta = v;
        if (k == "mu_star") mu_star = v;
        if (k == "sigma_star") sigma_star = v;
        if (k == "s_bar") s_bar = v;
        if (k == "t_tilde") t_tilde = v;
        if (k == "pooled_delta") pooled_delta = v;
        if (k == "delta_0") entity_delta = v;
        if (k == "std_delta") std_delta = v;
        if (k == "s2_pooled") s2_pooled = v;
    }
    // With N=1 the pooled coefficient is the entity's own delta, and t* is the
    // single-series t statistic pushed through the documented correction.
    CHECK(pooled_delta == doctest::Approx(entity_delta).epsilon(1e-12));
    CHECK(t_tilde == doctest::Approx(38.0));
    CHECK(s_bar > 0.0);
    CHECK(mu_star < 0.0);
    CHECK(sigma_star > 0.0);
    double expected =
        (t_delta - 1.0 * t_tilde * s_bar * std_delta * mu_star / s2_pooled) / sigma_star;
    CHECK(r.statistic == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ips with identical entities equals the single-series adf t") {
    auto y = lcg_series(30, true);
    PanelMatrix pm = identical_panel(y, 6);
    UnitRootSpec spec;
    TestResult r = ips_test(pm, spec);
    AdfResult single = adf_test(y, spec);
    double t_bar = kNaN;
    for (const auto& [k, v] : r.detail) {
        if (k == "t_bar") t_bar = v;
    }
    CHECK(t_bar == doctest::Approx(single.t_stat).epsilon(1e-12));
}

TEST_CASE("fisher combination hand values") {
    // All p-values equal to one: statistic zero, never rejects.
    PanelMatrix flat(2, 30);
    // Build two strongly trending series so the ADF p-value saturates at 1.
    for (std::size_t t = 0; t < 30; ++t) {
        flat.set(0, t, static_cast<double>(t) * 2.0 + ((t % 2) ? 0.3 : -0.3));
        flat.set(1, t, static_cast<double>(t) * 3.0 + ((t % 3) ? 0.2 : -0.4));
    }
    UnitRootSpec spec;
    TestResult r = fisher_combine(flat, spec, FisherMode::Adf);
    bool all_one = true;
    for (const auto& [k, v] : r.detail) {
        if (k.rfind("p_", 0) == 0) all_one = all_one && v == doctest::Approx(1.0);
    }
    if (all_one) {
        CHECK(r.statistic == doctest::Approx(0.0));
        CHECK(!r.rejected_at(0.10));
    }

    // Hand evaluation of the combination rule itself: p = {0.05, 0.05}.
    double stat = -2.0 * (std::log(0.05) + std::log(0.05));
    CHECK(stat == doctest::Approx(11.98).epsilon(1e-3));
    CHECK(chi_squared_sf(stat, 4.0) < 0.05);
    CHECK(chi_squared_sf(stat, 4.0) > 0.01);
}

TEST_CASE("panel tests drop short entities with warnings, error when all short") {
    std::mt19937_64 rng(9);
    PanelMatrix pm = random_walk_panel(rng, 3, 30);
    PanelMatrix mixed(4, 30);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t t = 0; t < 30; ++t) mixed.set(i, t, pm.at(i, t));
    }
    mixed.set(3, 0, 1.0);
    mixed.set(3, 1, 2.0);
    UnitRootSpec spec;
    TestResult r = ips_test(mixed, spec);
    CHECK(r.warnings.size() == 1);

    PanelMatrix all_short(2, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t t = 0; t < 4; ++t) all_short.set(i, t, static_cast<double>(t + i));
    }
    CHECK_THROWS_AS(ips_test(all_short, spec), DataError);
}

TEST_CASE("unit-root decisions are monotone across levels") {
    std::mt19937_64 rng(10);
    UnitRootSpec spec;
    for (int round = 0; round < 10; ++round) {
        PanelMatrix pm = random_walk_panel(rng, 8, 30);
        for (const TestResult& r :
             {llc_test(pm, spec), ips_test(pm, spec),
              fisher_combine(pm, spec, FisherMode::Adf),
              fisher_combine(pm, spec, FisherMode::Pp)}) {
            if (r.rejected_at(0.01)) CHECK(r.rejected_at(0.05));
            if (r.rejected_at(0.05)) CHECK(r.rejected_at(0.10));
            REQUIRE(r.p_value.has_value());
            CHECK(*r.p_value >= 0.0);
            CHECK(*r.p_value <= 1.0);
        }
    }
}

TEST_CASE("llc and ips reject stationary panels decisively") {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> d(0.0, 1.0);
    PanelMatrix pm(10, 40);
    for (std::size_t i = 0; i < 10; ++i) {
        double state = 0.0;
        for (std::size_t t = 0; t < 40; ++t) {
            state = 0.3 * state + d(rng);
            pm.set(i, t, state);
        }
    }
    UnitRootSpec spec;
    CHECK(llc_test(pm, spec).rejected_at(0.01));
    CHECK(ips_test(pm, spec).rejected_at(0.01));
    CHECK(fisher_combine(pm, spec, FisherMode::Adf).rejected_at(0.01));
}
