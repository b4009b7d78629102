#include "panelkit/ols.hpp"

#include <string>

namespace panelkit {

std::vector<long> deficient_columns(const Eigen::MatrixXd& x) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(1e-10);
    std::vector<long> out;
    long rank = qr.rank();
    if (rank >= x.cols()) return out;
    const auto& perm = qr.colsPermutation().indices();
    for (long j = rank; j < x.cols(); ++j) out.push_back(perm[j]);
    return out;
}

OlsFit ols(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
           const std::vector<std::string>* col_names) {
    if (x.rows() != y.size()) throw UsageError("ols: row count mismatch");
    if (x.rows() < x.cols()) {
        throw EstimationError("ols: fewer rows (" + std::to_string(x.rows()) +
                              ") than columns (" + std::to_string(x.cols()) + ")");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(1e-10);
    if (qr.rank() < x.cols()) {
        std::string msg = "ols: rank-deficient design, dependent column(s):";
        for (long j : deficient_columns(x)) {
            msg += ' ';
            msg += (col_names && j < static_cast<long>(col_names->size()))
                       ? (*col_names)[static_cast<std::size_t>(j)]
                       : std::to_string(j);
        }
        throw EstimationError(msg);
    }

    OlsFit fit;
    fit.n = x.rows();
    fit.k = x.cols();
    fit.coef = qr.solve(y);
    fit.residuals = y - x * fit.coef;
    fit.rss = fit.residuals.squaredNorm();
    fit.sigma2_ml = fit.rss / static_cast<double>(fit.n);
    fit.sigma2_ols = (fit.n > fit.k) ? fit.rss / static_cast<double>(fit.n - fit.k) : kNaN;

    fit.xtx_inv = (x.transpose() * x).ldlt().solve(
        Eigen::MatrixXd::Identity(x.cols(), x.cols()));
    fit.se.resize(fit.k);
    fit.tstat.resize(fit.k);
    for (long j = 0; j < fit.k; ++j) {
        double v = fit.sigma2_ols * fit.xtx_inv(j, j);
        fit.se[j] = (v > 0.0 && std::isfinite(v)) ? std::sqrt(v) : kNaN;
        fit.tstat[j] = (fit.se[j] > 0.0) ? fit.coef[j] / fit.se[j] : kNaN;
    }
    return fit;
}

}  // namespace panelkit
