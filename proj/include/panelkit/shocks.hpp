#pragma once

#include "panelkit/series.hpp"

namespace panelkit {
namespace indicators {

/// Signed decomposition of a price series against a trailing baseline.
/// Wherever defined: positive[t] >= 0, negative[t] <= 0, at most one branch is
/// nonzero, and positive[t] + negative[t] == price[t] - base[t].
struct ShockSeries {
    Series positive;
    Series negative;
    Series base;
};

/// Averaging decomposition: base[t] is the mean of the previous `lookback`
/// price levels; the deviation price[t] - base[t] lands in the positive branch
/// under a strict > and in the negative branch under a strict <, so a price
/// exactly at its trailing average produces zero in both. The first `lookback`
/// periods are missing.
ShockSeries shock_decompose(const Series& price_levels, int lookback);

/// Extremum-baseline variant: positive shocks against the trailing maximum,
/// negative against the trailing minimum. Kept as the comparison method the
/// averaging decomposition is an alternative to.
ShockSeries shock_decompose_hamilton(const Series& price_levels, int lookback);

}  // namespace indicators
}  // namespace panelkit
