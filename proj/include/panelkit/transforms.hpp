#pragma once

#include <span>

#include "panelkit/series.hpp"

namespace panelkit {

/// ln(x[t] / x[t-1]); the first period and any period adjacent to a missing
/// value come out missing. Throws DataError on non-positive values, naming the
/// period via `periods` when provided.
Series log_return(const Series& s, std::span<const int> periods = {});

/// Elementwise natural logarithm; missing propagates. Throws DataError on
/// non-positive values.
Series natural_log(const Series& s, std::span<const int> periods = {});

}  // namespace panelkit
