#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "panelkit/ecm_design.hpp"
#include "panelkit/ols.hpp"

namespace panelkit {
namespace pmg {

struct PMGOptions {
    double theta_tol = 1e-8;   ///< relative change in the long-run vector
    double grad_tol = 1e-6;    ///< score norm (or information-scaled step) at the optimum
    int max_iter = 500;
    int max_backtrack = 20;    ///< step halvings before declaring a failed ascent
    bool robust_se = false;    ///< sandwich instead of inverse-information covariance
};

struct PMGGroup {
    std::string entity;
    double rho = kNaN;
    double rho_se = kNaN;
    Eigen::VectorXd short_run;     ///< aligned with PMGResult::short_run_names
    Eigen::VectorXd short_run_se;
    double sigma2 = kNaN;          ///< ML residual variance
    long n_rows = 0;
};

/// Pooled Mean Group estimate: one long-run coefficient vector shared by all
/// groups, everything else heterogeneous.
struct PMGResult {
    std::vector<std::string> long_run_names;
    Eigen::VectorXd theta;
    Eigen::VectorXd theta_se;
    Eigen::MatrixXd theta_cov;

    std::vector<std::string> short_run_names;
    std::vector<PMGGroup> groups;
    /// Cross-group averages with dispersion-based standard errors, the form
    /// the estimation tables report.
    double rho_mean = kNaN;
    double rho_mean_se = kNaN;
    Eigen::VectorXd short_run_mean;
    Eigen::VectorXd short_run_mean_se;

    double log_likelihood = kNaN;
    int iterations = 0;
    double final_grad_norm = kNaN;
    double final_step_norm = kNaN;
    bool converged = false;
    std::vector<std::string> warnings;
};

/// Non-convergence carries the likelihood trajectory for diagnosis.
class PMGNonConvergence : public EstimationError {
public:
    PMGNonConvergence(const std::string& msg, std::vector<double> trajectory)
        : EstimationError(msg), loglik_trajectory(std::move(trajectory)) {}
    std::vector<double> loglik_trajectory;
};

/// Concentrated (profile) log-likelihood of the long-run vector: conditional
/// on theta, each group's adjustment speed, short-run coefficients and error
/// variance are closed-form least squares, leaving
///   sum_i [ -(T_i/2) ln(2 pi s2_i(theta)) - T_i/2 ].
double concentrated_loglik(const Eigen::VectorXd& theta, const ECMDesign& design);

/// Analytic score of the concentrated log-likelihood in theta.
Eigen::VectorXd concentrated_score(const Eigen::VectorXd& theta, const ECMDesign& design);

/// Maximizes the concentrated likelihood by Newton-type updates with a
/// backtracking line search. Standard errors for theta come from the inverse
/// observed information (numerically differentiated analytic score); per-group
/// standard errors from group least squares conditional on the optimum.
PMGResult estimate_pmg(const ECMDesign& design, const PMGOptions& options = {});

/// Unrestricted per-group least squares on one design block: coefficients over
/// [lagged level, regressor levels, short-run block], residual variance and
/// t-statistics.
struct GroupFit {
    std::string entity;
    std::vector<std::string> coef_names;
    Eigen::VectorXd coef;
    Eigen::VectorXd se;
    Eigen::VectorXd tstat;
    double sigma2 = kNaN;  ///< df-corrected residual variance
    double rss = kNaN;
    long n_rows = 0;
};

GroupFit group_ardl_ols(const GroupDesign& block, const ModelSpec& spec);

/// Mean Group estimate: per-group unrestricted fits averaged with
/// dispersion-based standard errors; the heterogeneous baseline PMG's pooling
/// restriction is judged against.
struct MGResult {
    std::vector<std::string> long_run_names;
    Eigen::VectorXd theta_mean;
    Eigen::VectorXd theta_se;
    double rho_mean = kNaN;
    double rho_se = kNaN;
    std::vector<std::string> short_run_names;
    Eigen::VectorXd short_run_mean;
    Eigen::VectorXd short_run_se;
    std::vector<GroupFit> group_fits;
    int n_groups_used = 0;
    std::vector<std::string> warnings;
};

MGResult estimate_mg(const ECMDesign& design);

}  // namespace pmg
}  // namespace panelkit
