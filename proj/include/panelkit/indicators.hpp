#pragma once

#include <span>

#include "panelkit/rolling.hpp"
#include "panelkit/series.hpp"

namespace panelkit {
namespace indicators {

/// Return on assets: net income over total assets, elementwise. Missing when
/// either input is missing; throws DataError when assets are not positive.
Series compute_roa(const Series& net_income, const Series& total_assets,
                   std::span<const int> periods = {});

/// Z-score with a degeneracy mask: positions where the rolling ROA dispersion
/// is exactly zero are missing and flagged, so downstream estimation never
/// ingests an infinity silently.
struct ZScoreSeries {
    Series values;
    std::vector<char> degenerate;
};

/// Rolling-window insolvency z-score, moving-average capital form:
/// (mean CAR over the window + mean ROA over the window) / std ROA over the window.
ZScoreSeries zscore_boyd(const Series& car, const Series& roa,
                         const RollingWindowConfig& config);

/// Current-capital form: (CAR_t + mean ROA over the window) / std ROA over the window.
ZScoreSeries zscore_yeyati(const Series& car, const Series& roa,
                           const RollingWindowConfig& config);

}  // namespace indicators
}  // namespace panelkit
