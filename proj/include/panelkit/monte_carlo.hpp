#pragma once

#include <string>
#include <utility>
#include <vector>

#include "panelkit/dgp.hpp"

namespace panelkit {
namespace sim {

/// Aggregated Monte Carlo evaluation: parameter recovery metrics for
/// estimator procedures, rejection rates for test procedures. Replication
/// failures are recorded, not propagated.
struct MonteCarloReport {
    std::string procedure;
    int reps = 0;
    int failures = 0;
    std::uint64_t master_seed = 0;
    int workers = 1;

    std::vector<std::string> parameter_names;
    std::vector<double> true_values;
    std::vector<double> mean_estimates;
    std::vector<double> bias;
    std::vector<double> rmse;
    std::vector<double> coverage;  ///< nominal 95% intervals

    std::vector<std::pair<std::string, double>> rejection_rates;  ///< at the 5% level
    std::vector<std::string> notes;

    std::string to_text() const;
};

/// Known procedures: pmg_recovery, cd_size, unit_root_size, unit_root_power.
/// Per-replication seeds derive deterministically from the master seed, so the
/// report is identical for any worker count. `workers` <= 0 reads
/// PANELKIT_WORKERS, defaulting to single-threaded.
MonteCarloReport monte_carlo(const std::string& procedure, const DGPParams& params, int reps,
                             int workers = 0);

std::vector<std::string> monte_carlo_procedures();

}  // namespace sim
}  // namespace panelkit
