#include "panelkit/pmg.hpp"

#include <cmath>
#include <numbers>

namespace panelkit {
namespace pmg {

namespace {

// Per-group sufficient statistics after projecting the short-run block out of
// the equation. Everything the likelihood iteration touches reduces to these,
// so one pass over the data supports any number of theta evaluations.
struct GroupStats {
    double t_obs = 0;          // T_i
    double g_yy = 0;           // dy' H dy
    double g_ly = 0;           // z_lag' H dy
    double g_ll = 0;           // z_lag' H z_lag
    Eigen::VectorXd v_xy;      // X' H dy
    Eigen::VectorXd v_xl;      // X' H z_lag
    Eigen::MatrixXd m_xx;      // X' H X
    std::string entity;
};

// Conditional estimates for one group at a given theta.
struct GroupState {
    double rho = 0;
    double sigma2 = 0;
    double rss = 0;
    bool near_perfect = false;
};

// A conditional R^2 this close to one is beyond any stochastic data and marks
// the likelihood's supremum (exact-fit) region; the residual itself is pure
// cancellation noise there.
constexpr double kPerfectFitRelTol = 1e-13;

std::vector<GroupStats> residualize(const ECMDesign& design) {
    std::vector<GroupStats> stats;
    stats.reserve(design.groups.size());
    for (const auto& g : design.groups) {
        if (g.n_rows() == 0) {
            throw EstimationError("group '" + g.entity + "' has no usable rows");
        }
        Eigen::VectorXd hy = g.dy;
        Eigen::VectorXd hl = g.z_lag;
        Eigen::MatrixXd hx = g.x_levels;
        if (g.w.cols() > 0) {
            Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(g.w);
            qr.setThreshold(1e-10);
            if (qr.rank() < g.w.cols()) {
                throw EstimationError("short-run block is rank deficient in group '" +
                                      g.entity + "'");
            }
            auto project_out = [&](Eigen::VectorXd& v) { v -= g.w * qr.solve(v); };
            project_out(hy);
            project_out(hl);
            for (long c = 0; c < hx.cols(); ++c) {
                Eigen::VectorXd col = hx.col(c);
                project_out(col);
                hx.col(c) = col;
            }
        }
        GroupStats s;
        s.entity = g.entity;
        s.t_obs = static_cast<double>(g.n_rows());
        s.g_yy = hy.squaredNorm();
        s.g_ly = hl.dot(hy);
        s.g_ll = hl.squaredNorm();
        s.v_xy = hx.transpose() * hy;
        s.v_xl = hx.transpose() * hl;
        s.m_xx = hx.transpose() * hx;
        stats.push_back(std::move(s));
    }
    return stats;
}

GroupState conditional_fit(const GroupStats& s, const Eigen::VectorXd& theta) {
    GroupState st;
    const double a = s.g_ll - 2.0 * theta.dot(s.v_xl) + theta.dot(s.m_xx * theta);
    const double b = s.g_ly - theta.dot(s.v_xy);
    if (!(a > 0.0)) {
        throw EstimationError("equilibrium term has no variation beyond the short-run block "
                              "in group '" + s.entity + "'");
    }
    st.rho = b / a;
    st.rss = s.g_yy - b * b / a;
    if (st.rss <= kPerfectFitRelTol * s.g_yy) {
        st.near_perfect = true;
        st.rss = std::max(st.rss, kPerfectFitRelTol * s.g_yy);
    }
    st.sigma2 = st.rss / s.t_obs;
    return st;
}

void require_imperfect(const GroupStats& s, const GroupState& st) {
    if (st.near_perfect) {
        throw EstimationError("perfect fit (zero residual variance) in group '" + s.entity +
                              "'");
    }
}

double loglik(const std::vector<GroupStats>& stats, const Eigen::VectorXd& theta,
              bool* any_perfect = nullptr) {
    double ll = 0.0;
    for (const auto& s : stats) {
        GroupState st = conditional_fit(s, theta);
        if (st.near_perfect) {
            if (any_perfect) {
                *any_perfect = true;
            } else {
                require_imperfect(s, st);
            }
        }
        ll += -0.5 * s.t_obs * std::log(2.0 * std::numbers::pi * st.sigma2) - 0.5 * s.t_obs;
    }
    return ll;
}

Eigen::VectorXd score(const std::vector<GroupStats>& stats, const Eigen::VectorXd& theta,
                      bool strict = false) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(theta.size());
    for (const auto& s : stats) {
        GroupState st = conditional_fit(s, theta);
        if (strict) require_imperfect(s, st);
        // X'e with e the full-equation residual at the conditional optimum.
        Eigen::VectorXd xe = s.v_xy - st.rho * (s.v_xl - s.m_xx * theta);
        g -= (st.rho / st.sigma2) * xe;
    }
    return g;
}

// FOC solution for theta holding every group's (rho, sigma2) fixed; the
// Newton-type update of the back-substitution iteration.
Eigen::VectorXd theta_update(const std::vector<GroupStats>& stats,
                             const std::vector<GroupState>& states) {
    const long k = stats.front().m_xx.rows();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(k);
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const double w = states[i].rho * states[i].rho / states[i].sigma2;
        a += w * stats[i].m_xx;
        c -= (states[i].rho / states[i].sigma2) *
             (stats[i].v_xy - states[i].rho * stats[i].v_xl);
    }
    Eigen::LDLT<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw EstimationError("singular pooled information matrix in the theta update");
    }
    return solver.solve(c);
}

Eigen::VectorXd initial_theta(const ECMDesign& design) {
    // Pooled static OLS of the dependent level on the regressor levels.
    long rows = 0;
    const long k = static_cast<long>(design.long_run_names.size());
    for (const auto& g : design.groups) rows += g.n_rows();
    Eigen::MatrixXd x(rows, k + 1);
    Eigen::VectorXd y(rows);
    long r = 0;
    for (const auto& g : design.groups) {
        for (long t = 0; t < g.n_rows(); ++t, ++r) {
            y[r] = g.z_lag[t] + g.dy[t];  // the level z_t
            x.row(r).head(k) = g.x_levels.row(t);
            x(r, k) = 1.0;
        }
    }
    Eigen::VectorXd beta = (x.transpose() * x).ldlt().solve(x.transpose() * y);
    return beta.head(k);
}

double dispersion_se(const std::vector<double>& values, double mean) {
    const std::size_t n = values.size();
    if (n < 2) return kNaN;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)));
}

}  // namespace

double concentrated_loglik(const Eigen::VectorXd& theta, const ECMDesign& design) {
    if (design.groups.empty()) throw EstimationError("empty design: no groups");
    if (theta.size() != static_cast<long>(design.long_run_names.size())) {
        throw UsageError("theta dimension does not match the long-run regressor count");
    }
    return loglik(residualize(design), theta);
}

Eigen::VectorXd concentrated_score(const Eigen::VectorXd& theta, const ECMDesign& design) {
    if (design.groups.empty()) throw EstimationError("empty design: no groups");
    if (theta.size() != static_cast<long>(design.long_run_names.size())) {
        throw UsageError("theta dimension does not match the long-run regressor count");
    }
    return score(residualize(design), theta, /*strict=*/true);
}

PMGResult estimate_pmg(const ECMDesign& design, const PMGOptions& options) {
    if (design.groups.empty()) throw EstimationError("empty design: no groups");
    const long k = static_cast<long>(design.long_run_names.size());

    std::vector<GroupStats> stats = residualize(design);
    Eigen::VectorXd theta = initial_theta(design);
    double ll = loglik(stats, theta);  // degenerate already at the start: genuine error
    std::vector<double> trajectory{ll};

    bool converged = false;
    bool near_perfect = false;
    int iter = 0;
    double step_norm = kNaN;
    for (; iter < options.max_iter; ++iter) {
        std::vector<GroupState> states;
        states.reserve(stats.size());
        for (const auto& s : stats) states.push_back(conditional_fit(s, theta));

        Eigen::VectorXd target = theta_update(stats, states);
        Eigen::VectorXd delta = target - theta;
        step_norm = delta.norm();
        const double scale = 1.0 + theta.norm();

        if (step_norm <= 1e-14 * scale) {
            converged = true;
            break;
        }

        double s = 1.0;
        double ll_new = kNaN;
        bool improved = false;
        bool cand_perfect = false;
        for (int h = 0; h <= options.max_backtrack; ++h) {
            cand_perfect = false;
            ll_new = loglik(stats, theta + s * delta, &cand_perfect);
            if (ll_new > ll || (ll_new == ll && s * step_norm <= options.theta_tol * scale)) {
                improved = true;
                break;
            }
            s *= 0.5;
        }
        if (!improved) {
            throw PMGNonConvergence("line search failed to improve the likelihood after " +
                                        std::to_string(options.max_backtrack) + " halvings",
                                    trajectory);
        }

        theta += s * delta;
        ll = ll_new;
        trajectory.push_back(ll);

        if (cand_perfect) {
            // An exact fit is the likelihood's supremum: the iterate has
            // reached the generating vector of noise-free data.
            converged = true;
            near_perfect = true;
            ++iter;
            break;
        }

        if (s * step_norm <= options.theta_tol * scale) {
            // theta has stopped moving; accept once the score is flat in the
            // information metric (the raw score norm is scale-dependent and
            // diverges on noise-free data even at the optimum).
            Eigen::VectorXd g = score(stats, theta);
            std::vector<GroupState> st2;
            for (const auto& sg : stats) st2.push_back(conditional_fit(sg, theta));
            Eigen::VectorXd newton = theta_update(stats, st2) - theta;
            if (g.norm() <= options.grad_tol || newton.norm() <= options.grad_tol * scale) {
                converged = true;
                ++iter;
                break;
            }
        }
    }

    if (!converged) {
        throw PMGNonConvergence("PMG did not converge in " + std::to_string(options.max_iter) +
                                    " iterations",
                                trajectory);
    }

    PMGResult result;
    result.long_run_names = design.long_run_names;
    result.theta = theta;
    result.log_likelihood = ll;
    result.iterations = iter;
    result.final_step_norm = step_norm;
    result.converged = true;
    result.warnings = design.warnings;
    result.short_run_names = design.groups.front().w_names;
    result.short_run_names.insert(result.short_run_names.begin(), "rho");
    if (near_perfect) {
        result.warnings.push_back(
            "near-perfect fit: the likelihood is unbounded at the optimum; variances and "
            "standard errors are not meaningful");
        result.final_grad_norm = 0.0;
        result.theta_cov = Eigen::MatrixXd::Constant(k, k, kNaN);
    } else {
        result.final_grad_norm = score(stats, theta).norm();

        // Observed information for theta: central differences of the analytic
        // score around the optimum.
        Eigen::MatrixXd hess(k, k);
        for (long j = 0; j < k; ++j) {
            const double h = 1e-5 * std::max(1.0, std::abs(theta[j]));
            Eigen::VectorXd tp = theta, tm = theta;
            tp[j] += h;
            tm[j] -= h;
            hess.col(j) = (score(stats, tp) - score(stats, tm)) / (2.0 * h);
        }
        hess = 0.5 * (hess + hess.transpose().eval());
        Eigen::MatrixXd info = -hess;
        Eigen::LDLT<Eigen::MatrixXd> info_ldlt(info);
        if (info_ldlt.info() == Eigen::Success) {
            result.theta_cov = info_ldlt.solve(Eigen::MatrixXd::Identity(k, k));
            if (options.robust_se) {
                Eigen::MatrixXd outer = Eigen::MatrixXd::Zero(k, k);
                for (const auto& s : stats) {
                    GroupState st = conditional_fit(s, theta);
                    Eigen::VectorXd si =
                        -(st.rho / st.sigma2) * (s.v_xy - st.rho * (s.v_xl - s.m_xx * theta));
                    outer += si * si.transpose();
                }
                result.theta_cov = result.theta_cov * outer * result.theta_cov;
            }
        } else {
            result.theta_cov = Eigen::MatrixXd::Constant(k, k, kNaN);
        }
    }
    result.theta_se.resize(k);
    for (long j = 0; j < k; ++j) {
        double v = result.theta_cov(j, j);
        result.theta_se[j] = (v >= 0.0 && std::isfinite(v)) ? std::sqrt(v) : kNaN;
    }

    // Per-group coefficients and standard errors conditional on the optimum.
    std::vector<double> rhos;
    const long n_w = design.groups.front().w.cols();
    std::vector<std::vector<double>> w_coefs(static_cast<std::size_t>(n_w));
    for (const auto& g : design.groups) {
        Eigen::MatrixXd z(g.n_rows(), 1 + n_w);
        z.col(0) = g.z_lag - g.x_levels * theta;
        if (n_w > 0) z.rightCols(n_w) = g.w;
        std::vector<std::string> names{"ec"};
        names.insert(names.end(), g.w_names.begin(), g.w_names.end());
        OlsFit fit = ols(z, g.dy, &names);

        PMGGroup pg;
        pg.entity = g.entity;
        pg.n_rows = g.n_rows();
        pg.rho = fit.coef[0];
        pg.rho_se = fit.se[0];
        pg.short_run = fit.coef.tail(n_w);
        pg.short_run_se = fit.se.tail(n_w);
        pg.sigma2 = fit.sigma2_ml;
        rhos.push_back(pg.rho);
        for (long c = 0; c < n_w; ++c) {
            w_coefs[static_cast<std::size_t>(c)].push_back(pg.short_run[c]);
        }
        result.groups.push_back(std::move(pg));
    }

    result.rho_mean = 0.0;
    for (double r : rhos) result.rho_mean += r;
    result.rho_mean /= static_cast<double>(rhos.size());
    result.rho_mean_se = dispersion_se(rhos, result.rho_mean);
    result.short_run_mean.resize(n_w);
    result.short_run_mean_se.resize(n_w);
    for (long c = 0; c < n_w; ++c) {
        const auto& vals = w_coefs[static_cast<std::size_t>(c)];
        double m = 0.0;
        for (double v : vals) m += v;
        m /= static_cast<double>(vals.size());
        result.short_run_mean[c] = m;
        result.short_run_mean_se[c] = dispersion_se(vals, m);
    }
    return result;
}

GroupFit group_ardl_ols(const GroupDesign& block, const ModelSpec& spec) {
    const long k = block.x_levels.cols();
    const long n_w = block.w.cols();
    const long cols = 1 + k + n_w;
    if (block.n_rows() < cols + 1) {
        throw EstimationError("group '" + block.entity + "' has " +
                              std::to_string(block.n_rows()) + " rows for " +
                              std::to_string(cols) + " parameters");
    }
    Eigen::MatrixXd x(block.n_rows(), cols);
    x.col(0) = block.z_lag;
    if (k > 0) x.middleCols(1, k) = block.x_levels;
    if (n_w > 0) x.rightCols(n_w) = block.w;

    GroupFit fit;
    fit.entity = block.entity;
    fit.coef_names.push_back(spec.dependent + "(-1)");
    for (const auto& v : spec.long_run) fit.coef_names.push_back(v);
    fit.coef_names.insert(fit.coef_names.end(), block.w_names.begin(), block.w_names.end());

    OlsFit f = ols(x, block.dy, &fit.coef_names);
    fit.coef = f.coef;
    fit.se = f.se;
    fit.tstat = f.tstat;
    fit.sigma2 = f.sigma2_ols;
    fit.rss = f.rss;
    fit.n_rows = f.n;
    return fit;
}

MGResult estimate_mg(const ECMDesign& design) {
    if (design.groups.empty()) throw EstimationError("empty design: no groups");
    const long k = static_cast<long>(design.long_run_names.size());
    const long n_w = design.groups.front().w.cols();

    MGResult result;
    result.long_run_names = design.long_run_names;
    result.short_run_names = design.groups.front().w_names;
    result.warnings = design.warnings;

    std::vector<std::vector<double>> thetas(static_cast<std::size_t>(k));
    std::vector<double> rhos;
    std::vector<std::vector<double>> w_coefs(static_cast<std::size_t>(n_w));

    for (const auto& g : design.groups) {
        GroupFit fit;
        try {
            fit = group_ardl_ols(g, design.spec);
        } catch (const EstimationError& e) {
            result.warnings.push_back("group '" + g.entity + "' dropped: " + e.what());
            continue;
        }
        const double phi = fit.coef[0];
        if (std::abs(phi) < 1e-12) {
            result.warnings.push_back("group '" + g.entity +
                                      "' dropped: adjustment coefficient numerically zero");
            continue;
        }
        rhos.push_back(phi);
        for (long j = 0; j < k; ++j) {
            thetas[static_cast<std::size_t>(j)].push_back(-fit.coef[1 + j] / phi);
        }
        for (long c = 0; c < n_w; ++c) {
            w_coefs[static_cast<std::size_t>(c)].push_back(fit.coef[1 + k + c]);
        }
        result.group_fits.push_back(std::move(fit));
    }

    result.n_groups_used = static_cast<int>(rhos.size());
    if (result.n_groups_used == 0) {
        throw EstimationError("mean group estimation: every group failed");
    }

    auto mean_of = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m += x;
        return m / static_cast<double>(v.size());
    };

    result.theta_mean.resize(k);
    result.theta_se.resize(k);
    for (long j = 0; j < k; ++j) {
        const auto& v = thetas[static_cast<std::size_t>(j)];
        result.theta_mean[j] = mean_of(v);
        result.theta_se[j] = dispersion_se(v, result.theta_mean[j]);
    }
    result.rho_mean = mean_of(rhos);
    result.rho_se = dispersion_se(rhos, result.rho_mean);
    result.short_run_mean.resize(n_w);
    result.short_run_se.resize(n_w);
    for (long c = 0; c < n_w; ++c) {
        const auto& v = w_coefs[static_cast<std::size_t>(c)];
        result.short_run_mean[c] = mean_of(v);
        result.short_run_se[c] = dispersion_se(v, result.short_run_mean[c]);
    }
    return result;
}

}  // namespace pmg
}  // namespace panelkit
