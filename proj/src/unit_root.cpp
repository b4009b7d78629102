#include "panelkit/unit_root.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "panelkit/ols.hpp"
#include "panelkit/ur_tables.hpp"

namespace panelkit {
namespace diag {

namespace {

struct AdfMatrices {
    Eigen::VectorXd dy;
    Eigen::MatrixXd x;  // [y_lag, d.y lags..., const, trend]
    long rows = 0;
    long cols = 0;
};

AdfMatrices adf_matrices(const std::vector<double>& y, int p, Deterministic det) {
    const long n = static_cast<long>(y.size());
    const long rows = n - p - 1;
    const long cols = 1 + p + 1 + (det == Deterministic::ConstantAndTrend ? 1 : 0);
    if (rows < cols + 1) {
        throw DataError("series too short for the unit-root regression: " +
                        std::to_string(n) + " observations, lag " + std::to_string(p));
    }
    AdfMatrices m;
    m.rows = rows;
    m.cols = cols;
    m.dy.resize(rows);
    m.x.resize(rows, cols);
    for (long r = 0; r < rows; ++r) {
        const long t = r + p + 1;
        m.dy[r] = y[t] - y[t - 1];
        m.x(r, 0) = y[t - 1];
        for (int j = 1; j <= p; ++j) m.x(r, j) = y[t - j] - y[t - j - 1];
        m.x(r, p + 1) = 1.0;
        if (det == Deterministic::ConstantAndTrend) m.x(r, p + 2) = static_cast<double>(t);
    }
    return m;
}

int select_lag_aic(const std::vector<double>& y, Deterministic det, int max_lags) {
    // Fit every candidate on the sample implied by the largest lag so the
    // criteria are comparable, then report the winner.
    int feasible_max = max_lags;
    const long n = static_cast<long>(y.size());
    while (feasible_max > 0) {
        long rows = n - feasible_max - 1;
        long cols = 1 + feasible_max + 1 + (det == Deterministic::ConstantAndTrend ? 1 : 0);
        if (rows >= cols + 1) break;
        --feasible_max;
    }
    int best_p = 0;
    double best_aic = kNaN;
    for (int p = 0; p <= feasible_max; ++p) {
        AdfMatrices full = adf_matrices(y, feasible_max, det);
        long cols = 1 + p + 1 + (det == Deterministic::ConstantAndTrend ? 1 : 0);
        Eigen::MatrixXd x(full.rows, cols);
        x.col(0) = full.x.col(0);
        for (int j = 1; j <= p; ++j) x.col(j) = full.x.col(j);
        x.col(p + 1) = full.x.col(feasible_max + 1);
        if (det == Deterministic::ConstantAndTrend) x.col(p + 2) = full.x.col(feasible_max + 2);
        OlsFit fit = ols(x, full.dy);
        double aic = static_cast<double>(full.rows) * std::log(fit.rss / full.rows) +
                     2.0 * static_cast<double>(cols);
        if (std::isnan(best_aic) || aic < best_aic) {
            best_aic = aic;
            best_p = p;
        }
    }
    return best_p;
}

double bartlett_long_run_variance(const std::vector<double>& u, int bandwidth) {
    const long n = static_cast<long>(u.size());
    double gamma0 = 0.0;
    for (double v : u) gamma0 += v * v;
    gamma0 /= static_cast<double>(n);
    double lrv = gamma0;
    for (int l = 1; l <= bandwidth && l < n; ++l) {
        double g = 0.0;
        for (long t = l; t < n; ++t) g += u[t] * u[t - l];
        g /= static_cast<double>(n);
        lrv += 2.0 * (1.0 - static_cast<double>(l) / (bandwidth + 1.0)) * g;
    }
    return lrv > 0.0 ? lrv : gamma0;
}

int newey_west_bandwidth(long n) {
    return static_cast<int>(std::floor(4.0 * std::pow(n / 100.0, 2.0 / 9.0)));
}

// ---------------------------------------------------------------------------
// Lookups in the simulated null tables (ur_tables.hpp). Interpolation is
// linear in 1/T between tabulated lengths, and between tabulated lags for
// fractional average lags.
// ---------------------------------------------------------------------------

bool moment_at(long n, int p, Deterministic det, double& mean, double& var) {
    const auto& table = detail::kUrMoments;
    const int rows = static_cast<int>(std::size(table));
    int lo = -1, hi = -1;
    for (int i = 0; i < rows; ++i) {
        if (table[i].p != p) continue;
        double m = det == Deterministic::Constant ? table[i].mean_c : table[i].mean_ct;
        if (std::isnan(m)) continue;
        if (table[i].t <= n && (lo < 0 || table[i].t > table[lo].t)) lo = i;
        if (table[i].t >= n && (hi < 0 || table[i].t < table[hi].t)) hi = i;
    }
    if (lo < 0 && hi < 0) return false;
    if (lo < 0) lo = hi;
    if (hi < 0) hi = lo;
    auto pick = [&](const detail::UrMomentRow& r, double& m, double& v) {
        m = det == Deterministic::Constant ? r.mean_c : r.mean_ct;
        v = det == Deterministic::Constant ? r.var_c : r.var_ct;
    };
    double m0, v0, m1, v1;
    pick(table[lo], m0, v0);
    pick(table[hi], m1, v1);
    if (table[hi].t == table[lo].t) {
        mean = m0;
        var = v0;
        return true;
    }
    double w = (1.0 / table[lo].t - 1.0 / static_cast<double>(n)) /
               (1.0 / table[lo].t - 1.0 / table[hi].t);
    mean = m0 + w * (m1 - m0);
    var = v0 + w * (v1 - v0);
    return true;
}

// Interpolated quantile row for one (n, p, det); false when no feasible rows.
template <typename Row, std::size_t N>
bool quantile_row(const Row (&table)[N], long n, int p, Deterministic det,
                  double (&q)[detail::kUrQuantileCount]) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(N); ++i) {
        if (table[i].p != p) continue;
        const double* src = det == Deterministic::Constant ? table[i].q_c : table[i].q_ct;
        if (std::isnan(src[0])) continue;
        if (table[i].t <= n && (lo < 0 || table[i].t > table[lo].t)) lo = i;
        if (table[i].t >= n && (hi < 0 || table[i].t < table[hi].t)) hi = i;
    }
    if (lo < 0 && hi < 0) return false;
    if (lo < 0) lo = hi;
    if (hi < 0) hi = lo;
    const double* qlo = det == Deterministic::Constant ? table[lo].q_c : table[lo].q_ct;
    const double* qhi = det == Deterministic::Constant ? table[hi].q_c : table[hi].q_ct;
    double w = table[hi].t == table[lo].t
                   ? 0.0
                   : (1.0 / table[lo].t - 1.0 / static_cast<double>(n)) /
                         (1.0 / table[lo].t - 1.0 / table[hi].t);
    for (int k = 0; k < detail::kUrQuantileCount; ++k) {
        q[k] = qlo[k] + w * (qhi[k] - qlo[k]);
    }
    return true;
}

// P-value from a simulated quantile row: piecewise-linear in the normal
// quantile of the probability, which is close to linear in t for these
// distributions; the extreme tails extrapolate the end segments.
double pvalue_from_quantiles(const double (&q)[detail::kUrQuantileCount], double t) {
    static double zs[detail::kUrQuantileCount];
    static bool init = false;
    if (!init) {
        for (int k = 0; k < detail::kUrQuantileCount; ++k) {
            zs[k] = normal_quantile(detail::kUrQuantileProbs[k]);
        }
        init = true;
    }
    const int m = detail::kUrQuantileCount;
    int j = 0;
    while (j < m && q[j] < t) ++j;
    double z;
    if (j == 0) {
        double slope = (zs[1] - zs[0]) / std::max(q[1] - q[0], 1e-12);
        z = zs[0] - (q[0] - t) * slope;
    } else if (j == m) {
        double slope = (zs[m - 1] - zs[m - 2]) / std::max(q[m - 1] - q[m - 2], 1e-12);
        z = zs[m - 1] + (t - q[m - 1]) * slope;
    } else {
        double denom = std::max(q[j] - q[j - 1], 1e-12);
        z = zs[j - 1] + (zs[j] - zs[j - 1]) * (t - q[j - 1]) / denom;
    }
    double p = normal_cdf(z);
    return std::min(std::max(p, 1e-12), 1.0 - 1e-12);
}

bool llc_factor_at(double avg_len, double avg_lag, Deterministic det, double& mu,
                   double& sigma) {
    const int p_lo = static_cast<int>(std::floor(avg_lag));
    const int p_hi = static_cast<int>(std::ceil(avg_lag));
    auto factor_for_lag = [&](int p, double& m, double& s) {
        const auto& table = detail::kLlcFactors;
        int lo = -1, hi = -1;
        for (int i = 0; i < static_cast<int>(std::size(table)); ++i) {
            if (table[i].p != p) continue;
            double probe = det == Deterministic::Constant ? table[i].mu_c : table[i].mu_ct;
            if (std::isnan(probe)) continue;
            if (table[i].t <= avg_len && (lo < 0 || table[i].t > table[lo].t)) lo = i;
            if (table[i].t >= avg_len && (hi < 0 || table[i].t < table[hi].t)) hi = i;
        }
        if (lo < 0 && hi < 0) return false;
        if (lo < 0) lo = hi;
        if (hi < 0) hi = lo;
        auto pick = [&](const detail::LlcFactorRow& r, double& mm, double& ss) {
            mm = det == Deterministic::Constant ? r.mu_c : r.mu_ct;
            ss = det == Deterministic::Constant ? r.sigma_c : r.sigma_ct;
        };
        double m0, s0, m1, s1;
        pick(table[lo], m0, s0);
        pick(table[hi], m1, s1);
        double w = table[hi].t == table[lo].t
                       ? 0.0
                       : (1.0 / table[lo].t - 1.0 / avg_len) /
                             (1.0 / table[lo].t - 1.0 / table[hi].t);
        m = m0 + w * (m1 - m0);
        s = s0 + w * (s1 - s0);
        return true;
    };
    double m_lo, s_lo, m_hi, s_hi;
    if (!factor_for_lag(p_lo, m_lo, s_lo)) return false;
    if (p_hi == p_lo) {
        mu = m_lo;
        sigma = s_lo;
        return true;
    }
    if (!factor_for_lag(p_hi, m_hi, s_hi)) return false;
    double w = avg_lag - p_lo;
    mu = m_lo + w * (m_hi - m_lo);
    sigma = s_lo + w * (s_hi - s_lo);
    return true;
}

struct EntitySeries {
    std::size_t index;
    std::vector<double> y;
};

std::vector<EntitySeries> usable_entities(const PanelMatrix& panel, std::size_t min_len,
                                          std::vector<std::string>& warnings) {
    std::vector<EntitySeries> out;
    for (std::size_t i = 0; i < panel.n_entities; ++i) {
        std::vector<double> y = panel.contiguous_row(i);
        if (y.size() < min_len) {
            warnings.push_back("entity " + std::to_string(i) + " dropped: " +
                               std::to_string(y.size()) + " contiguous observations, need " +
                               std::to_string(min_len));
            continue;
        }
        out.push_back({i, std::move(y)});
    }
    if (out.empty()) {
        throw DataError("no entity has enough contiguous observations for the unit-root test");
    }
    return out;
}

int effective_lag(const std::vector<double>& y, const UnitRootSpec& spec) {
    return spec.ic_selection ? select_lag_aic(y, spec.deterministic, spec.max_lags)
                             : spec.fixed_lag;
}

std::size_t min_series_length(const UnitRootSpec& spec, bool with_lags) {
    const int det_cols = spec.deterministic == Deterministic::ConstantAndTrend ? 2 : 1;
    const int p = with_lags ? std::max(spec.fixed_lag, 1) : 0;
    return static_cast<std::size_t>(2 * p + 3 + det_cols);
}

}  // namespace

void UnitRootSpec::validate() const {
    if (fixed_lag < 0) throw UsageError("unit-root lag must be >= 0");
    if (max_lags < fixed_lag) throw UsageError("max_lags must be >= the fixed lag");
}

AdfResult adf_test(const std::vector<double>& y, const UnitRootSpec& spec) {
    spec.validate();
    const int p = effective_lag(y, spec);
    AdfMatrices m = adf_matrices(y, p, spec.deterministic);
    OlsFit fit = ols(m.x, m.dy);
    AdfResult r;
    r.t_stat = fit.tstat[0];
    r.coef = fit.coef[0];
    r.lags = p;
    r.n_obs = m.rows;
    // Finite-sample null quantiles when tabulated, the asymptotic response
    // surface otherwise.
    double q[detail::kUrQuantileCount];
    if (quantile_row(detail::kAdfQuantiles, static_cast<long>(y.size()), p,
                     spec.deterministic, q)) {
        r.p_value = pvalue_from_quantiles(q, r.t_stat);
    } else {
        r.p_value = mackinnon_pvalue(r.t_stat, spec.deterministic);
    }
    return r;
}

AdfResult pp_test(const std::vector<double>& y, const UnitRootSpec& spec) {
    spec.validate();
    AdfMatrices m = adf_matrices(y, 0, spec.deterministic);
    OlsFit fit = ols(m.x, m.dy);

    std::vector<double> u(fit.residuals.data(), fit.residuals.data() + fit.residuals.size());
    const bool default_bw = !spec.pp_bandwidth.has_value();
    const int bw = spec.pp_bandwidth.value_or(newey_west_bandwidth(m.rows));
    double gamma0 = 0.0;
    for (double v : u) gamma0 += v * v;
    gamma0 /= static_cast<double>(m.rows);
    const double lrv = bartlett_long_run_variance(u, bw);

    const double t_rho = fit.tstat[0];
    const double se_rho = fit.se[0];
    const double s = std::sqrt(fit.sigma2_ols);
    const double z_tau = std::sqrt(gamma0 / lrv) * t_rho -
                         (lrv - gamma0) * static_cast<double>(m.rows) * se_rho /
                             (2.0 * std::sqrt(lrv) * s);

    AdfResult r;
    r.t_stat = z_tau;
    r.coef = fit.coef[0];
    r.lags = bw;
    r.n_obs = m.rows;
    // The tabulated null assumes the default bandwidth rule; an explicit
    // bandwidth falls back to the asymptotic surface.
    double q[detail::kUrQuantileCount];
    if (default_bw && quantile_row(detail::kPpQuantiles, static_cast<long>(y.size()), -1,
                                   spec.deterministic, q)) {
        r.p_value = pvalue_from_quantiles(q, z_tau);
    } else {
        r.p_value = mackinnon_pvalue(z_tau, spec.deterministic);
    }
    return r;
}

LlcComponents llc_components(const PanelMatrix& panel, const UnitRootSpec& spec) {
    spec.validate();
    LlcComponents out;
    auto entities = usable_entities(panel, min_series_length(spec, true), out.warnings);

    double sum_ve = 0.0, sum_vv = 0.0, sum_ratio = 0.0, sum_teff = 0.0;
    double sum_lag = 0.0, sum_len = 0.0;
    std::vector<Eigen::VectorXd> e_parts, v_parts;
    for (const auto& ent : entities) {
        const int p = effective_lag(ent.y, spec);
        AdfMatrices m = adf_matrices(ent.y, p, spec.deterministic);

        // Partial the lagged differences and deterministics out of d.y and
        // the lagged level.
        Eigen::MatrixXd d = m.x.rightCols(m.cols - 1);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(d);
        Eigen::VectorXd e_hat = m.dy - d * qr.solve(m.dy);
        Eigen::VectorXd v_hat = m.x.col(0) - d * qr.solve(m.x.col(0));

        const double t_eff = static_cast<double>(m.rows);
        double delta_i = v_hat.dot(e_hat) / v_hat.squaredNorm();
        double s2_eps = (e_hat - delta_i * v_hat).squaredNorm() / t_eff;
        if (!(s2_eps > 0.0)) {
            throw EstimationError("llc: zero prewhitened residual variance for an entity");
        }

        // Ratio of long-run to innovation standard deviation of the
        // differences; Bartlett kernel with the truncation 3.21 T^(1/3).
        std::vector<double> dy(ent.y.size() - 1);
        for (std::size_t t = 1; t < ent.y.size(); ++t) dy[t - 1] = ent.y[t] - ent.y[t - 1];
        double mean_dy = 0.0;
        for (double v : dy) mean_dy += v;
        mean_dy /= static_cast<double>(dy.size());
        for (double& v : dy) v -= mean_dy;
        int k_bar =
            static_cast<int>(std::floor(3.21 * std::cbrt(static_cast<double>(ent.y.size()))));
        k_bar = std::min<int>(k_bar, static_cast<int>(dy.size()) - 1);
        double s2_y = bartlett_long_run_variance(dy, k_bar);
        sum_ratio += std::sqrt(s2_y / s2_eps);

        e_parts.push_back(e_hat / std::sqrt(s2_eps));
        v_parts.push_back(v_hat / std::sqrt(s2_eps));
        sum_teff += t_eff;
        sum_lag += p;
        sum_len += static_cast<double>(ent.y.size());
        out.per_entity.emplace_back("delta_" + std::to_string(ent.index), delta_i);
    }

    for (std::size_t g = 0; g < e_parts.size(); ++g) {
        sum_ve += v_parts[g].dot(e_parts[g]);
        sum_vv += v_parts[g].squaredNorm();
    }
    const double n_used = static_cast<double>(entities.size());
    const double delta = sum_ve / sum_vv;
    double rss = 0.0;
    for (std::size_t g = 0; g < e_parts.size(); ++g) {
        rss += (e_parts[g] - delta * v_parts[g]).squaredNorm();
    }
    out.s2_pooled = rss / sum_teff;
    out.std_delta = std::sqrt(out.s2_pooled / sum_vv);
    out.pooled_delta = delta;
    out.t_delta = delta / out.std_delta;
    out.t_tilde = sum_teff / n_used;
    out.s_bar = sum_ratio / n_used;
    out.avg_lag = sum_lag / n_used;
    out.avg_len = sum_len / n_used;
    out.n_used = static_cast<int>(entities.size());
    out.multiplier =
        n_used * out.t_tilde * out.s_bar * out.std_delta / out.s2_pooled;
    return out;
}

TestResult llc_test(const PanelMatrix& panel, const UnitRootSpec& spec) {
    LlcComponents c = llc_components(panel, spec);

    double mu_star = 0.0, sigma_star = 1.0;
    if (!llc_factor_at(c.avg_len, c.avg_lag, spec.deterministic, mu_star, sigma_star)) {
        throw UsageError("no tabulated LLC correction factors for average length " +
                         std::to_string(c.avg_len) + ", lag " + std::to_string(c.avg_lag));
    }

    TestResult result;
    result.test_name = "llc";
    result.null_hypothesis = "common unit root (pooled adjustment coefficient zero)";
    result.warnings = c.warnings;
    result.statistic = (c.t_delta - c.multiplier * mu_star) / sigma_star;
    result.set_decisions_from_pvalue(normal_cdf(result.statistic));
    result.detail = c.per_entity;
    result.detail.emplace_back("pooled_delta", c.pooled_delta);
    result.detail.emplace_back("t_delta", c.t_delta);
    result.detail.emplace_back("s_bar", c.s_bar);
    result.detail.emplace_back("t_tilde", c.t_tilde);
    result.detail.emplace_back("mu_star", mu_star);
    result.detail.emplace_back("sigma_star", sigma_star);
    result.detail.emplace_back("std_delta", c.std_delta);
    result.detail.emplace_back("s2_pooled", c.s2_pooled);
    return result;
}

TestResult ips_test(const PanelMatrix& panel, const UnitRootSpec& spec) {
    spec.validate();
    TestResult result;
    result.test_name = "ips";
    result.null_hypothesis = "each entity has a unit root";

    auto entities = usable_entities(panel, min_series_length(spec, true), result.warnings);

    double t_sum = 0.0, mean_sum = 0.0, var_sum = 0.0;
    for (const auto& ent : entities) {
        AdfResult r = adf_test(ent.y, spec);
        double mean = 0.0, var = 1.0;
        if (!moment_at(static_cast<long>(ent.y.size()), r.lags, spec.deterministic, mean,
                       var)) {
            throw UsageError("no tabulated IPS moments for length " +
                             std::to_string(ent.y.size()) + ", lag " + std::to_string(r.lags));
        }
        t_sum += r.t_stat;
        mean_sum += mean;
        var_sum += var;
        result.detail.emplace_back("t_" + std::to_string(ent.index), r.t_stat);
    }
    const double n = static_cast<double>(entities.size());
    const double t_bar = t_sum / n;
    const double w = std::sqrt(n) * (t_bar - mean_sum / n) / std::sqrt(var_sum / n);

    result.statistic = w;
    result.set_decisions_from_pvalue(normal_cdf(w));
    result.detail.emplace_back("t_bar", t_bar);
    return result;
}

TestResult fisher_combine(const PanelMatrix& panel, const UnitRootSpec& spec, FisherMode mode) {
    spec.validate();
    TestResult result;
    result.test_name = mode == FisherMode::Adf ? "fisher_adf" : "fisher_pp";
    result.null_hypothesis = "each entity has a unit root";

    auto entities =
        usable_entities(panel, min_series_length(spec, mode == FisherMode::Adf), result.warnings);

    double stat = 0.0;
    for (const auto& ent : entities) {
        AdfResult r = mode == FisherMode::Adf ? adf_test(ent.y, spec) : pp_test(ent.y, spec);
        double p = r.p_value;
        if (p <= 0.0) {
            p = 1e-10;
            result.warnings.push_back("entity " + std::to_string(ent.index) +
                                      " p-value clamped to 1e-10");
        }
        stat += -2.0 * std::log(p);
        result.detail.emplace_back("p_" + std::to_string(ent.index), p);
    }
    result.statistic = stat;
    result.set_decisions_from_pvalue(
        chi_squared_sf(stat, 2.0 * static_cast<double>(entities.size())));
    return result;
}

}  // namespace diag
}  // namespace panelkit
