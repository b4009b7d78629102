#pragma once

#include "panelkit/series.hpp"

namespace panelkit {
namespace indicators {

/// Trailing window of `n` periods ending at and including t. A statistic is
/// produced only when at least `min_obs` non-missing observations fall inside
/// the window; the first n-1 periods of a complete series are shorter windows
/// and obey the same rule.
struct RollingWindowConfig {
    int n = 4;
    int min_obs = 2;
    /// Population (divisor n_obs) instead of sample (divisor n_obs - 1)
    /// standard deviation; sensitivity switch, off by default.
    bool population_std = false;

    void validate() const;
};

Series rolling_mean(const Series& s, const RollingWindowConfig& config);

/// Standard deviation over the same trailing window; needs at least
/// max(min_obs, 2) observations.
Series rolling_std(const Series& s, const RollingWindowConfig& config);

}  // namespace indicators
}  // namespace panelkit
