#include "panelkit/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "panelkit/distributions.hpp"

namespace panelkit {
namespace diag {

namespace {

// Overlapping period indices where both entities are observed.
std::vector<std::size_t> overlap(const PanelMatrix& p, std::size_t i, std::size_t j) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < p.n_periods; ++t) {
        if (p.has(i, t) && p.has(j, t)) out.push_back(t);
    }
    return out;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double da = a[t] - ma, db = b[t] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa <= 0.0 || sbb <= 0.0) return kNaN;
    return sab / std::sqrt(saa * sbb);
}

std::vector<double> average_ranks(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t s = 0;
    while (s < n) {
        std::size_t e = s;
        while (e + 1 < n && x[idx[e + 1]] == x[idx[s]]) ++e;
        double r = 0.5 * (static_cast<double>(s + 1) + static_cast<double>(e + 1));
        for (std::size_t k = s; k <= e; ++k) ranks[idx[k]] = r;
        s = e + 1;
    }
    return ranks;
}

void check_dims(const PanelMatrix& p) {
    if (p.n_entities < 2) throw UsageError("cross-sectional dependence tests need N >= 2");
}

}  // namespace

double spearman_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw UsageError("spearman_correlation: need two equal-length series");
    }
    return pearson(average_ranks(a), average_ranks(b));
}

TestResult pesaran_cd(const PanelMatrix& panel) {
    check_dims(panel);
    const std::size_t n = panel.n_entities;
    TestResult result;
    result.test_name = "pesaran_cd";
    result.null_hypothesis = "cross-sectional independence";

    double sum = 0.0;
    std::size_t used_pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ts = overlap(panel, i, j);
            if (ts.size() < 3) {
                result.warnings.push_back("pair (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") excluded: overlap " +
                                          std::to_string(ts.size()) + " < 3");
                continue;
            }
            std::vector<double> a, b;
            a.reserve(ts.size());
            b.reserve(ts.size());
            for (std::size_t t : ts) {
                a.push_back(panel.at(i, t));
                b.push_back(panel.at(j, t));
            }
            double rho = pearson(a, b);
            if (!std::isfinite(rho)) {
                result.warnings.push_back("pair (" + std::to_string(i) + "," +
                                          std::to_string(j) +
                                          ") excluded: zero variance in overlap");
                continue;
            }
            sum += std::sqrt(static_cast<double>(ts.size())) * rho;
            ++used_pairs;
        }
    }
    if (used_pairs == 0) {
        throw DataError("pesaran_cd: no entity pair has enough overlapping observations");
    }
    const double nn = static_cast<double>(n);
    result.statistic = std::sqrt(2.0 / (nn * (nn - 1.0))) * sum;
    result.set_decisions_from_pvalue(2.0 * normal_sf(std::abs(result.statistic)));
    result.detail.emplace_back("pairs_used", static_cast<double>(used_pairs));
    return result;
}

TestResult friedman_cd(const PanelMatrix& panel) {
    check_dims(panel);
    const std::size_t n = panel.n_entities;
    TestResult result;
    result.test_name = "friedman_cd";
    result.null_hypothesis = "cross-sectional independence";

    double sum_r = 0.0;
    std::size_t used_pairs = 0;
    double min_overlap = static_cast<double>(panel.n_periods);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ts = overlap(panel, i, j);
            if (ts.size() < 3) {
                result.warnings.push_back("pair (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") excluded: overlap " +
                                          std::to_string(ts.size()) + " < 3");
                continue;
            }
            std::vector<double> a, b;
            for (std::size_t t : ts) {
                a.push_back(panel.at(i, t));
                b.push_back(panel.at(j, t));
            }
            double r = spearman_correlation(a, b);
            if (!std::isfinite(r)) {
                result.warnings.push_back("pair (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") excluded: constant ranks");
                continue;
            }
            sum_r += r;
            min_overlap = std::min(min_overlap, static_cast<double>(ts.size()));
            ++used_pairs;
        }
    }
    if (used_pairs == 0) {
        throw DataError("friedman_cd: no entity pair has enough overlapping observations");
    }
    const double nn = static_cast<double>(n);
    const double r_ave = sum_r / (0.5 * nn * (nn - 1.0));
    // Chi-square mapping assumes a balanced panel; use the common T and warn
    // when overlaps fall short of it.
    const double t_eff = static_cast<double>(panel.n_periods);
    if (min_overlap < t_eff) {
        result.warnings.push_back("unbalanced overlaps: chi-square reference uses the full "
                                  "period count");
    }
    result.statistic = (t_eff - 1.0) * ((nn - 1.0) * r_ave + 1.0);
    result.set_decisions_from_pvalue(chi_squared_sf(result.statistic, t_eff - 1.0));
    result.detail.emplace_back("average_spearman", r_ave);
    result.detail.emplace_back("pairs_used", static_cast<double>(used_pairs));
    return result;
}

TestResult frees_cd(const PanelMatrix& panel) {
    check_dims(panel);
    const std::size_t n = panel.n_entities;

    // Balanced overlap: every entity observed on the same period set.
    std::vector<std::size_t> common;
    for (std::size_t t = 0; t < panel.n_periods; ++t) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) all = panel.has(i, t);
        if (all) common.push_back(t);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t count = 0;
        for (std::size_t t = 0; t < panel.n_periods; ++t) count += panel.has(i, t);
        if (count != common.size()) {
            throw DataError("frees_cd requires a balanced panel: subset the data to the "
                            "common observed periods first");
        }
    }
    if (common.size() < 4) throw DataError("frees_cd: need at least 4 common periods");

    TestResult result;
    result.test_name = "frees_cd";
    result.null_hypothesis = "cross-sectional independence";

    double sum_r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<double> a, b;
            for (std::size_t t : common) {
                a.push_back(panel.at(i, t));
                b.push_back(panel.at(j, t));
            }
            double r = spearman_correlation(a, b);
            if (!std::isfinite(r)) {
                throw DataError("frees_cd: constant series for an entity over the common "
                                "sample");
            }
            sum_r2 += r * r;
        }
    }
    const double nn = static_cast<double>(n);
    const int t_eff = static_cast<int>(common.size());
    const double r2_ave = sum_r2 / (0.5 * nn * (nn - 1.0));
    result.statistic = nn * (r2_ave - 1.0 / (t_eff - 1.0));
    result.set_decisions_from_pvalue(frees_pvalue(result.statistic, t_eff));
    result.detail.emplace_back("average_squared_spearman", r2_ave);
    result.detail.emplace_back("common_periods", static_cast<double>(t_eff));
    return result;
}

}  // namespace diag
}  // namespace panelkit
