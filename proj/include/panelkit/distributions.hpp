#pragma once

#include "panelkit/common.hpp"

namespace panelkit {
namespace diag {

/// Deterministic terms in unit-root regressions.
enum class Deterministic { Constant, ConstantAndTrend };

double normal_cdf(double z);
double normal_sf(double z);
double normal_quantile(double p);
double chi_squared_sf(double x, double df);

/// P-value of a Dickey-Fuller-type t statistic from the MacKinnon (1994, 2010)
/// response-surface approximation; the same surface serves the ADF and
/// Phillips-Perron statistics. Coefficients are tabulated in distributions.cpp.
double mackinnon_pvalue(double tau, Deterministic det);

/// Upper tail of sum_r lambda_r * (chisq(df_r) - df_r) by Imhof's
/// characteristic-function inversion.
double imhof_upper_tail(double x, const double* lambda, const double* df, int terms);

/// Upper-tail p-value of the cross-sectional dependence Q statistic against
/// its asymptotic null, a weighted difference of two independent chi-squares
/// with T-dependent weights.
double frees_pvalue(double stat, int t_periods);

/// The null's weights and degrees of freedom: the two distinct eigenvalues of
/// the centered squared-Spearman kernel (closed form via exact rank moments)
/// with multiplicities T-1 and T(T-3)/2.
void frees_kernel_weights(int t_periods, double& a, double& b, double& df1, double& df2);

/// Critical value of the same null at upper-tail probability `alpha`.
double frees_critical_value(double alpha, int t_periods);

}  // namespace diag
}  // namespace panelkit
