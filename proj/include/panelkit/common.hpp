#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace panelkit {

/// Bad input data (malformed CSV, invalid values, impossible panel shapes).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical estimation failure (non-convergence, rank deficiency, degenerate fits).
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller misuse: invalid configuration, unknown names, contradictory options.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Significance stars from a |t|-ratio against two-sided normal critical values.
/// ***: 1%, **: 5%, *: 10%.
inline std::string significance_stars(double t_abs) {
    if (!std::isfinite(t_abs)) return "";
    if (t_abs > 2.576) return "***";
    if (t_abs > 1.960) return "**";
    if (t_abs > 1.645) return "*";
    return "";
}

inline std::string significance_stars(double estimate, double std_error) {
    if (!(std_error > 0.0) || !std::isfinite(estimate)) return "";
    return significance_stars(std::abs(estimate / std_error));
}

}  // namespace panelkit
