#pragma once

#include <cstdint>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {
namespace sim {

enum class XProcess { RandomWalk, StationaryAr };

/// Parameterized error-correction data generating process: the estimation
/// target run forward as a generator, substituting for proprietary data.
struct DGPParams {
    int n_groups = 17;
    int n_periods = 40;
    std::vector<double> theta_true{0.5, -0.3};
    double rho_min = -0.9;  ///< per-group adjustment speeds drawn uniformly
    double rho_max = -0.3;
    double short_run_min = -0.2;  ///< per-group difference-term coefficients
    double short_run_max = 0.2;
    double intercept_sd = 0.1;  ///< group effects mu_i ~ N(0, sd^2)
    double noise_sd = 0.1;
    XProcess x_process = XProcess::RandomWalk;
    double x_ar = 0.5;  ///< AR(1) coefficient when x_process is stationary
    double x_innovation_sd = 1.0;
    std::uint64_t seed = 20240101;
    int burn_in = 50;
    bool heteroskedastic = false;  ///< per-group noise sd drawn from [sigma_min, sigma_max]
    double sigma_min = 0.05;
    double sigma_max = 0.20;
    int first_period = 2000;

    void validate() const;
};

/// Simulates X per group and generates z recursively from the error-correction
/// equation with drawn group parameters; burn-in discarded. Variables are
/// named z, x1..xk. Bit-reproducible from the seed regardless of execution
/// order elsewhere.
PanelDataset simulate_ecm_panel(const DGPParams& params);

/// The per-group parameters a simulation drew, for exact-recovery checks.
struct DrawnGroupParams {
    std::vector<double> rho;
    std::vector<std::vector<double>> short_run;
    std::vector<double> intercept;
    std::vector<double> sigma;
};
PanelDataset simulate_ecm_panel(const DGPParams& params, DrawnGroupParams* drawn);

/// Analysis-shaped synthetic panel carrying the full variable roster the
/// replication grid expects: z1/z2 generated from an error-correction relation
/// on (wti, pbvr); oil price return and shock decompositions from one shared
/// price path; bank-level controls per entity and macro controls duplicated
/// across entities.
struct ReplicationDGPParams {
    int n_groups = 17;
    int n_periods = 40;
    std::uint64_t seed = 20240101;
    int shock_lookback = 3;
    int first_period = 2000;
};
PanelDataset simulate_replication_panel(const ReplicationDGPParams& params);

}  // namespace sim
}  // namespace panelkit
