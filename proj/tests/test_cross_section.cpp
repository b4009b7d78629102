#include <doctest.h>

#include <cmath>
#include <random>

#include "panelkit/cross_section.hpp"
#include "panelkit/distributions.hpp"

using namespace panelkit;
using namespace panelkit::diag;

namespace {

PanelMatrix two_series(const std::vector<double>& a, const std::vector<double>& b) {
    PanelMatrix pm(2, a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
        pm.set(0, t, a[t]);
        pm.set(1, t, b[t]);
    }
    return pm;
}

PanelMatrix random_panel(std::mt19937_64& rng, std::size_t n, std::size_t t) {
    std::normal_distribution<double> d(0.0, 1.0);
    PanelMatrix pm(n, t);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t u = 0; u < t; ++u) pm.set(i, u, d(rng));
    }
    return pm;
}

}  // namespace

TEST_CASE("pesaran CD closed forms at rho = +1 and -1") {
    std::vector<double> a{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<double> neg;
    for (double v : a) neg.push_back(-v);

    TestResult same = pesaran_cd(two_series(a, a));
    CHECK(same.statistic == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(same.rejected_at(0.01));
    CHECK(same.rejected_at(0.05));
    CHECK(same.rejected_at(0.10));

    TestResult anti = pesaran_cd(two_series(a, neg));
    CHECK(anti.statistic == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(anti.rejected_at(0.01));
}

TEST_CASE("pesaran CD against a naive-loop oracle on random panels") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 25; ++round) {
        PanelMatrix pm = random_panel(rng, 4, 6);
        double sum = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                double ma = 0, mb = 0;
                for (std::size_t t = 0; t < 6; ++t) {
                    ma += pm.at(i, t);
                    mb += pm.at(j, t);
                }
                ma /= 6;
                mb /= 6;
                double saa = 0, sbb = 0, sab = 0;
                for (std::size_t t = 0; t < 6; ++t) {
                    saa += (pm.at(i, t) - ma) * (pm.at(i, t) - ma);
                    sbb += (pm.at(j, t) - mb) * (pm.at(j, t) - mb);
                    sab += (pm.at(i, t) - ma) * (pm.at(j, t) - mb);
                }
                sum += std::sqrt(6.0) * sab / std::sqrt(saa * sbb);
            }
        }
        double expected = std::sqrt(2.0 / (4.0 * 3.0)) * sum;
        CHECK(pesaran_cd(pm).statistic == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("pesaran CD is invariant to positive affine per-entity transforms") {
    std::mt19937_64 rng(42);
    PanelMatrix pm = random_panel(rng, 5, 8);
    PanelMatrix scaled = pm;
    std::uniform_real_distribution<double> slope(0.5, 4.0), shift(-3.0, 3.0);
    for (std::size_t i = 0; i < 5; ++i) {
        double a = slope(rng), b = shift(rng);
        for (std::size_t t = 0; t < 8; ++t) scaled.set(i, t, a * pm.at(i, t) + b);
    }
    CHECK(pesaran_cd(scaled).statistic ==
          doctest::Approx(pesaran_cd(pm).statistic).epsilon(1e-10));
}

TEST_CASE("pair exclusion warnings and the all-excluded error") {
    PanelMatrix pm(2, 5);
    pm.set(0, 0, 1.0);
    pm.set(0, 1, 2.0);
    pm.set(1, 3, 1.0);
    pm.set(1, 4, 2.0);
    CHECK_THROWS_AS(pesaran_cd(pm), DataError);  // no overlap at all

    PanelMatrix pm3(3, 6);
    for (std::size_t t = 0; t < 6; ++t) {
        pm3.set(0, t, static_cast<double>(t) + ((t % 2) ? 0.4 : -0.3));
        pm3.set(1, t, 2.0 * t + ((t % 3) ? 0.1 : -0.2));
    }
    pm3.set(2, 0, 1.0);  // entity 2 overlaps nowhere enough
    TestResult r = pesaran_cd(pm3);
    CHECK(r.warnings.size() == 2);
    CHECK(std::isfinite(r.statistic));
}

TEST_CASE("friedman: identical series give the maximal statistic") {
    std::vector<double> a{3, 1, 4, 1.5, 5, 9, 2, 6, 5.5};
    PanelMatrix pm(4, a.size());
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t t = 0; t < a.size(); ++t) pm.set(i, t, a[t]);
    }
    TestResult r = friedman_cd(pm);
    // R_ave = 1 -> FR = (T-1) N.
    CHECK(r.statistic == doctest::Approx((a.size() - 1.0) * 4.0));
    CHECK(r.rejected_at(0.01));
}

TEST_CASE("friedman matches brute-force Spearman for a permuted pair") {
    std::vector<double> a{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<double> b{2, 1, 4, 3, 6, 5, 8, 7};  // fixed permutation of ranks
    double r = spearman_correlation(a, b);
    // Brute force: ranks are the values themselves here.
    double ma = 4.5, mb = 4.5, saa = 0, sbb = 0, sab = 0;
    for (std::size_t t = 0; t < 8; ++t) {
        saa += (a[t] - ma) * (a[t] - ma);
        sbb += (b[t] - mb) * (b[t] - mb);
        sab += (a[t] - ma) * (b[t] - mb);
    }
    CHECK(r == doctest::Approx(sab / std::sqrt(saa * sbb)).epsilon(1e-12));

    TestResult fr = friedman_cd(two_series(a, b));
    double expected = (8.0 - 1.0) * ((2.0 - 1.0) * r + 1.0);
    CHECK(fr.statistic == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("rank tests are invariant to strictly monotone transforms") {
    std::mt19937_64 rng(43);
    PanelMatrix pm = random_panel(rng, 5, 9);
    PanelMatrix warped = pm;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t t = 0; t < 9; ++t) {
            warped.set(i, t, std::exp(0.5 * pm.at(i, t)) + (i + 1));
        }
    }
    CHECK(friedman_cd(warped).statistic ==
          doctest::Approx(friedman_cd(pm).statistic).epsilon(1e-10));
    CHECK(frees_cd(warped).statistic ==
          doctest::Approx(frees_cd(pm).statistic).epsilon(1e-10));
}

TEST_CASE("frees: identical series reject, antithetic pairs also reject") {
    std::vector<double> a{3, 1, 4, 1.5, 5, 9, 2, 6, 5.5};
    std::vector<double> neg;
    for (double v : a) neg.push_back(-v);

    TestResult same = frees_cd(two_series(a, a));
    CHECK(same.rejected_at(0.01));

    TestResult anti = frees_cd(two_series(a, neg));
    // Squared correlations are sign-blind.
    CHECK(anti.statistic == doctest::Approx(same.statistic).epsilon(1e-12));
    CHECK(anti.rejected_at(0.01));
}

TEST_CASE("frees requires balanced overlap") {
    PanelMatrix pm(2, 6);
    for (std::size_t t = 0; t < 6; ++t) pm.set(0, t, static_cast<double>(t * t % 5));
    for (std::size_t t = 1; t < 6; ++t) pm.set(1, t, static_cast<double>((t * 7) % 6));
    CHECK_THROWS_WITH_AS(frees_cd(pm), doctest::Contains("balanced"), DataError);
}

TEST_CASE("decision maps are monotone and consistent with p-values") {
    std::mt19937_64 rng(44);
    for (int round = 0; round < 40; ++round) {
        PanelMatrix pm = random_panel(rng, 6, 9);
        for (const TestResult& r :
             {pesaran_cd(pm), friedman_cd(pm), frees_cd(pm)}) {
            REQUIRE(r.p_value.has_value());
            double p = *r.p_value;
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(r.rejected_at(0.01) == (p <= 0.01));
            CHECK(r.rejected_at(0.05) == (p <= 0.05));
            CHECK(r.rejected_at(0.10) == (p <= 0.10));
            if (r.rejected_at(0.01)) CHECK(r.rejected_at(0.05));
            if (r.rejected_at(0.05)) CHECK(r.rejected_at(0.10));
        }
    }
}

TEST_CASE("imhof inversion matches the closed form for one chi-square term") {
    // 2*(chisq_2 - 2) > x  <=>  chisq_2 > x/2 + 2, and P(chisq_2 > q) = exp(-q/2).
    const double lambda[1] = {2.0};
    const double df[1] = {2.0};
    for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0, 6.0, 12.0}) {
        double expected = std::exp(-(x / 2.0 + 2.0) / 2.0);
        CHECK(imhof_upper_tail(x, lambda, df, 1) == doctest::Approx(expected).epsilon(1e-7));
    }
}

TEST_CASE("frees critical values invert the p-value") {
    for (double alpha : {0.01, 0.05, 0.10}) {
        double c = frees_critical_value(alpha, 9);
        CHECK(frees_pvalue(c, 9) == doctest::Approx(alpha).epsilon(1e-6));
    }
    // Tighter alpha means a larger critical value.
    CHECK(frees_critical_value(0.01, 9) > frees_critical_value(0.05, 9));
    CHECK(frees_critical_value(0.05, 9) > frees_critical_value(0.10, 9));
}
