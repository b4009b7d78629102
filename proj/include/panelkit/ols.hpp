#pragma once

#include <Eigen/Dense>
#include <vector>

#include "panelkit/common.hpp"

namespace panelkit {

struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd se;
    Eigen::VectorXd tstat;
    Eigen::VectorXd residuals;
    double rss = 0.0;
    double sigma2_ols = 0.0;  // rss / (n - k)
    double sigma2_ml = 0.0;   // rss / n
    Eigen::MatrixXd xtx_inv;
    long n = 0;
    long k = 0;
};

/// Least squares via column-pivoted QR. Throws EstimationError on rank
/// deficiency; `col_names`, when given, is used to name the dependent columns.
OlsFit ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
           const std::vector<std::string>* col_names = nullptr);

/// Indices of columns beyond the numerical rank of x (empty when full rank).
std::vector<long> deficient_columns(const Eigen::MatrixXd& x);

}  // namespace panelkit
