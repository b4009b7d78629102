#include <doctest.h>

#include <cmath>
#include <random>

#include "panelkit/indicators.hpp"

using namespace panelkit;
using namespace panelkit::indicators;

namespace {

Series from(std::initializer_list<double> vals) {
    Series s(vals.size());
    std::size_t t = 0;
    for (double v : vals) s.set(t++, v);
    return s;
}

}  // namespace

TEST_CASE("rolling_mean: trailing windows") {
    RollingWindowConfig full4{4, 4};
    Series ones = from({1, 1, 1, 1});
    Series m = rolling_mean(ones, full4);
    CHECK(!m.has(0));
    CHECK(!m.has(1));
    CHECK(!m.has(2));
    CHECK(m.at(3) == 1.0);

    Series ramp = from({1, 2, 3, 4});
    CHECK(rolling_mean(ramp, full4).at(3) == doctest::Approx(2.5));

    RollingWindowConfig two{2, 2};
    Series m2 = rolling_mean(ramp, two);
    CHECK(!m2.has(0));
    CHECK(m2.at(1) == doctest::Approx(1.5));
    CHECK(m2.at(2) == doctest::Approx(2.5));
    CHECK(m2.at(3) == doctest::Approx(3.5));
}

TEST_CASE("rolling_std: sample divisor and degenerate windows") {
    RollingWindowConfig full4{4, 4};
    CHECK(rolling_std(from({5, 5, 5, 5}), full4).at(3) == 0.0);
    // Hand value: sample std of {0.01, 0.02, 0.01, 0.02} with divisor 3.
    CHECK(rolling_std(from({0.01, 0.02, 0.01, 0.02}), full4).at(3) ==
          doctest::Approx(0.0057735).epsilon(1e-5));
    RollingWindowConfig two{2, 2};
    CHECK(rolling_std(from({1, 3}), two).at(1) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rolling config invariants are enforced") {
    CHECK_THROWS_AS(rolling_mean(from({1, 2}), RollingWindowConfig{1, 1}), UsageError);
    CHECK_THROWS_AS(rolling_mean(from({1, 2}), RollingWindowConfig{4, 1}), UsageError);
    CHECK_THROWS_AS(rolling_mean(from({1, 2}), RollingWindowConfig{4, 5}), UsageError);
}

TEST_CASE("rolling windows skip missing values and respect min_obs") {
    Series s(5);
    s.set(0, 2.0);
    s.set(2, 4.0);
    s.set(4, 6.0);
    RollingWindowConfig cfg{4, 2};
    Series m = rolling_mean(s, cfg);
    CHECK(!m.has(0));   // only one observation in window
    CHECK(!m.has(1));
    CHECK(m.at(2) == doctest::Approx(3.0));
    CHECK(m.at(3) == doctest::Approx(3.0));
    CHECK(m.at(4) == doctest::Approx(5.0));  // window {t=1..4} holds 4 and 6
}

TEST_CASE("compute_roa: ratios, zero income, losses, bad assets") {
    Series income = from({0.0, 5.0, -2.0});
    Series assets = from({10.0, 100.0, 50.0});
    Series roa = compute_roa(income, assets);
    CHECK(roa.at(0) == 0.0);
    CHECK(roa.at(1) == doctest::Approx(0.05));
    CHECK(roa.at(2) == doctest::Approx(-0.04));

    Series bad = from({1.0, 0.0, 3.0});
    std::vector<int> periods{2008, 2009, 2010};
    CHECK_THROWS_WITH_AS(compute_roa(income, bad, periods), doctest::Contains("2009"),
                         DataError);
}

TEST_CASE("z-score golden values from the 4-period worked example") {
    RollingWindowConfig cfg{4, 4};
    Series car = from({0.10, 0.10, 0.10, 0.10});
    Series roa = from({0.01, 0.02, 0.01, 0.02});
    ZScoreSeries z1 = zscore_boyd(car, roa, cfg);
    REQUIRE(z1.values.has(3));
    CHECK(z1.values.at(3) == doctest::Approx(19.919).epsilon(1e-3));

    Series car2 = from({0.10, 0.10, 0.10, 0.12});
    ZScoreSeries z2 = zscore_yeyati(car2, roa, cfg);
    REQUIRE(z2.values.has(3));
    CHECK(z2.values.at(3) == doctest::Approx(23.383).epsilon(1e-3));
}

TEST_CASE("constant ROA window is degenerate-flagged missing") {
    RollingWindowConfig cfg{4, 4};
    Series car = from({0.1, 0.1, 0.1, 0.1});
    Series roa = from({0.01, 0.01, 0.01, 0.01});
    ZScoreSeries z = zscore_boyd(car, roa, cfg);
    CHECK(!z.values.has(3));
    CHECK(z.degenerate[3] == 1);
    ZScoreSeries z2 = zscore_yeyati(car, roa, cfg);
    CHECK(!z2.values.has(3));
    CHECK(z2.degenerate[3] == 1);
}

TEST_CASE("insufficient window data yields plain missing") {
    RollingWindowConfig cfg{4, 4};
    Series car = from({0.1, 0.1});
    Series roa = from({0.01, 0.02});
    ZScoreSeries z = zscore_boyd(car, roa, cfg);
    CHECK(!z.values.has(0));
    CHECK(!z.values.has(1));
    CHECK(z.degenerate[1] == 0);
}

TEST_CASE("boyd equals yeyati when CAR is constant over the window") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.001, 0.05);
    RollingWindowConfig cfg{4, 4};
    Series car(12);
    Series roa(12);
    for (std::size_t t = 0; t < 12; ++t) {
        car.set(t, 0.11);
        roa.set(t, u(rng));
    }
    ZScoreSeries z1 = zscore_boyd(car, roa, cfg);
    ZScoreSeries z2 = zscore_yeyati(car, roa, cfg);
    for (std::size_t t = 0; t < 12; ++t) {
        CHECK(z1.values.has(t) == z2.values.has(t));
        if (z1.values.has(t)) {
            CHECK(z1.values.at(t) == doctest::Approx(z2.values.at(t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("adding a constant to CAR shifts the z-scores by c/sigma") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.001, 0.05);
    RollingWindowConfig cfg{4, 4};
    const double c = 0.03;
    Series car(16), car_shift(16), roa(16);
    for (std::size_t t = 0; t < 16; ++t) {
        double v = 0.08 + u(rng);
        car.set(t, v);
        car_shift.set(t, v + c);
        roa.set(t, u(rng));
    }
    Series sigma = rolling_std(roa, cfg);
    ZScoreSeries z2 = zscore_yeyati(car, roa, cfg);
    ZScoreSeries z2s = zscore_yeyati(car_shift, roa, cfg);
    ZScoreSeries z1 = zscore_boyd(car, roa, cfg);
    ZScoreSeries z1s = zscore_boyd(car_shift, roa, cfg);
    for (std::size_t t = 0; t < 16; ++t) {
        if (!z2.values.has(t)) continue;
        CHECK(z2s.values.at(t) - z2.values.at(t) ==
              doctest::Approx(c / sigma.at(t)).epsilon(1e-10));
        // The Boyd window is saturated with shifted values everywhere here.
        CHECK(z1s.values.at(t) - z1.values.at(t) ==
              doctest::Approx(c / sigma.at(t)).epsilon(1e-10));
    }
}

TEST_CASE("joint positive scaling of CAR and ROA leaves z-scores unchanged") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.001, 0.05);
    RollingWindowConfig cfg{4, 2};
    const double k = 7.5;
    Series car(14), roa(14), car_k(14), roa_k(14);
    for (std::size_t t = 0; t < 14; ++t) {
        double a = 0.1 + u(rng), b = u(rng);
        car.set(t, a);
        roa.set(t, b);
        car_k.set(t, k * a);
        roa_k.set(t, k * b);
    }
    ZScoreSeries z1 = zscore_boyd(car, roa, cfg);
    ZScoreSeries z1k = zscore_boyd(car_k, roa_k, cfg);
    ZScoreSeries z2 = zscore_yeyati(car, roa, cfg);
    ZScoreSeries z2k = zscore_yeyati(car_k, roa_k, cfg);
    for (std::size_t t = 0; t < 14; ++t) {
        CHECK(z1.values.has(t) == z1k.values.has(t));
        if (z1.values.has(t)) {
            CHECK(z1.values.at(t) == doctest::Approx(z1k.values.at(t)).epsilon(1e-12));
        }
        if (z2.values.has(t)) {
            CHECK(z2.values.at(t) == doctest::Approx(z2k.values.at(t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("population std switch changes the divisor") {
    RollingWindowConfig sample{4, 4};
    RollingWindowConfig pop{4, 4, true};
    Series s = from({1, 2, 3, 4});
    double sd_sample = rolling_std(s, sample).at(3);
    double sd_pop = rolling_std(s, pop).at(3);
    CHECK(sd_sample == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(sd_pop == doctest::Approx(std::sqrt(5.0 / 4.0)));
}
