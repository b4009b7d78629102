#pragma once

#include <string>
#include <vector>

#include "panelkit/common.hpp"

namespace panelkit {
namespace pmg {

/// Declaration of one panel ARDL error-correction model: dependent variable,
/// long-run regressors (entering the equilibrium term), short-run controls
/// (entering only in differences) and the lag orders.
struct ModelSpec {
    std::string dependent;
    std::vector<std::string> long_run;
    std::vector<std::string> short_run_controls;
    int p = 1;  ///< autoregressive order (p - 1 lagged differences of the dependent)
    int q = 1;  ///< distributed-lag order (q lagged differences of regressors)
    bool intercept = true;
    /// Equilibrium term uses lagged instead of contemporaneous regressor
    /// levels; both conventions appear in the literature.
    bool ec_lagged_x = false;

    void validate() const {
        if (dependent.empty()) throw UsageError("model spec: dependent variable not set");
        if (long_run.empty()) throw UsageError("model spec: long-run regressors must be non-empty");
        if (p < 1) throw UsageError("model spec: p must be >= 1");
        if (q < 0) throw UsageError("model spec: q must be >= 0");
        for (const auto& v : long_run) {
            if (v == dependent) {
                throw UsageError("model spec: dependent appears among long-run regressors");
            }
        }
        for (const auto& v : short_run_controls) {
            if (v == dependent) {
                throw UsageError("model spec: dependent appears among short-run controls");
            }
        }
    }

    /// Parameters estimated per group: adjustment speed, dependent-difference
    /// lags, regressor and control difference lags, intercept.
    int per_group_params() const {
        int k = static_cast<int>(long_run.size());
        int m = static_cast<int>(short_run_controls.size());
        return 1 + (p - 1) + q * k + q * m + (intercept ? 1 : 0);
    }
};

}  // namespace pmg
}  // namespace panelkit
