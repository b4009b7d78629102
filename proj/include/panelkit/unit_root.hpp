#pragma once

#include <optional>
#include <vector>

#include "panelkit/distributions.hpp"
#include "panelkit/panel.hpp"
#include "panelkit/test_result.hpp"

namespace panelkit {
namespace diag {

/// Configuration shared by the unit-root test battery.
struct UnitRootSpec {
    Deterministic deterministic = Deterministic::Constant;
    /// Lag order of the augmentation terms; fixed by default (information
    /// criteria are unreliable on short annual panels).
    int fixed_lag = 1;
    bool ic_selection = false;
    int max_lags = 4;
    /// Bartlett truncation for the Phillips-Perron long-run variance;
    /// defaults to the Newey-West rule floor(4 (T/100)^(2/9)).
    std::optional<int> pp_bandwidth;

    void validate() const;
};

struct AdfResult {
    double t_stat = kNaN;
    double p_value = kNaN;
    double coef = kNaN;  ///< coefficient on the lagged level
    int lags = 0;
    long n_obs = 0;  ///< regression rows after lagging and differencing
};

/// Augmented Dickey-Fuller regression on a single contiguous series:
/// d.y_t on [y_{t-1}, d.y_{t-1..t-p}, deterministics]; p-value from the
/// MacKinnon response surface.
AdfResult adf_test(const std::vector<double>& y, const UnitRootSpec& spec);

/// Phillips-Perron Z_tau: the lag-free Dickey-Fuller regression with a
/// serial-correlation correction from a Bartlett-kernel long-run variance.
AdfResult pp_test(const std::vector<double>& y, const UnitRootSpec& spec);

/// Levin-Lin-Chu pooled t*: entity-wise prewhitening, pooled adjustment
/// coefficient, and the published mean/variance corrections; standard normal
/// under the common unit-root null.
TestResult llc_test(const PanelMatrix& panel, const UnitRootSpec& spec);

/// Im-Pesaran-Shin W: cross-entity average of ADF t statistics standardized
/// by moments tabulated under the null (table committed with its generator).
TestResult ips_test(const PanelMatrix& panel, const UnitRootSpec& spec);

enum class FisherMode { Adf, Pp };

/// Combined -2 sum(ln p_i) against chi-square with 2N degrees of freedom;
/// per-entity p-values from ADF or Phillips-Perron regressions.
TestResult fisher_combine(const PanelMatrix& panel, const UnitRootSpec& spec, FisherMode mode);

/// Raw pooled-regression pieces of the LLC statistic before the mean/variance
/// correction; the building block the table generator simulates.
struct LlcComponents {
    double t_delta = kNaN;      ///< pooled adjustment t statistic
    double multiplier = kNaN;   ///< N * T~ * S_bar * STD(delta) / s2_pooled
    double pooled_delta = kNaN;
    double std_delta = kNaN;
    double s2_pooled = kNaN;
    double s_bar = kNaN;
    double t_tilde = kNaN;   ///< average effective length
    double avg_lag = 0.0;
    double avg_len = 0.0;    ///< average contiguous series length
    int n_used = 0;
    std::vector<std::pair<std::string, double>> per_entity;
    std::vector<std::string> warnings;
};

LlcComponents llc_components(const PanelMatrix& panel, const UnitRootSpec& spec);

}  // namespace diag
}  // namespace panelkit
