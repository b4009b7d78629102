#include <doctest.h>

#include <cmath>
#include <random>

#include "panelkit/shocks.hpp"

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

TEST_CASE("averaging decomposition on the worked series") {
    ShockSeries up = shock_decompose(from({100, 80, 90, 110}), 3);
    CHECK(!up.positive.has(0));
    CHECK(!up.positive.has(2));
    CHECK(up.base.at(3) == doctest::Approx(90.0));
    CHECK(up.positive.at(3) == doctest::Approx(20.0));
    CHECK(up.negative.at(3) == 0.0);

    ShockSeries flat = shock_decompose(from({100, 100, 100, 100}), 3);
    CHECK(flat.positive.at(3) == 0.0);
    CHECK(flat.negative.at(3) == 0.0);

    ShockSeries down = shock_decompose(from({100, 120, 110, 80}), 3);
    CHECK(down.base.at(3) == doctest::Approx(110.0));
    CHECK(down.positive.at(3) == 0.0);
    CHECK(down.negative.at(3) == doctest::Approx(-30.0));
}

TEST_CASE("extremum variant compares against trailing max and min") {
    ShockSeries up = shock_decompose_hamilton(from({100, 80, 90, 110}), 3);
    CHECK(up.positive.at(3) == doctest::Approx(10.0));  // 110 - max(100,80,90)
    CHECK(up.negative.at(3) == 0.0);                    // 110 above min(100,80,90)

    ShockSeries mono = shock_decompose_hamilton(from({1, 2, 3, 4, 5, 6}), 3);
    for (std::size_t t = 0; t < 6; ++t) {
        if (mono.negative.has(t)) CHECK(mono.negative.at(t) == 0.0);
    }

    ShockSeries down = shock_decompose_hamilton(from({100, 120, 110, 80}), 3);
    CHECK(down.negative.at(3) == doctest::Approx(-20.0));  // 80 - min(100,120,110)
    CHECK(down.positive.at(3) == 0.0);
}

TEST_CASE("lookback validation and missing propagation") {
    CHECK_THROWS_AS(shock_decompose(from({1, 2, 3}), 0), UsageError);
    Series gap(6);
    gap.set(0, 100.0);
    gap.set(1, 101.0);
    gap.set(2, 102.0);
    // position 3 missing
    gap.set(4, 104.0);
    gap.set(5, 105.0);
    ShockSeries s = shock_decompose(gap, 3);
    CHECK(!s.positive.has(3));
    CHECK(!s.positive.has(4));  // window crosses the gap
    CHECK(!s.positive.has(5));
}

TEST_CASE("shock invariants hold over random positive series") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(1.0, 200.0);
    std::uniform_int_distribution<int> lb_dist(1, 5);
    for (int round = 0; round < 300; ++round) {
        const int lookback = lb_dist(rng);
        const std::size_t n = 6 + rng() % 30;
        Series price(n);
        for (std::size_t t = 0; t < n; ++t) price.set(t, u(rng));
        ShockSeries s = shock_decompose(price, lookback);
        for (std::size_t t = 0; t < n; ++t) {
            if (t < static_cast<std::size_t>(lookback)) {
                CHECK(!s.positive.has(t));
                continue;
            }
            REQUIRE(s.positive.has(t));
            REQUIRE(s.negative.has(t));
            CHECK(s.positive.at(t) >= 0.0);
            CHECK(s.negative.at(t) <= 0.0);
            CHECK(s.positive.at(t) * s.negative.at(t) == 0.0);
            CHECK(s.positive.at(t) + s.negative.at(t) == price.at(t) - s.base.at(t));
            // Definitional predicate: a positive shock fires exactly when the
            // price exceeds its trailing mean.
            double mean = 0.0;
            for (int j = 1; j <= lookback; ++j) mean += price.at(t - j);
            mean /= lookback;
            CHECK((s.positive.at(t) > 0.0) == (price.at(t) > mean));
            CHECK((s.negative.at(t) < 0.0) == (price.at(t) < mean));
        }
    }
}

TEST_CASE("hamilton invariants: signs and zero product") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(1.0, 50.0);
    for (int round = 0; round < 100; ++round) {
        Series price(20);
        for (std::size_t t = 0; t < 20; ++t) price.set(t, u(rng));
        ShockSeries s = shock_decompose_hamilton(price, 3);
        for (std::size_t t = 3; t < 20; ++t) {
            CHECK(s.positive.at(t) >= 0.0);
            CHECK(s.negative.at(t) <= 0.0);
        }
    }
}
