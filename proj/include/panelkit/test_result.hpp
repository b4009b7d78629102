#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "panelkit/common.hpp"

namespace panelkit {
namespace diag {

/// Outcome of one diagnostic test: statistic, p-value when the null has one,
/// and reject / fail-to-reject decisions at the three standard levels.
struct TestResult {
    std::string test_name;
    double statistic = kNaN;
    std::optional<double> p_value;
    std::string null_hypothesis;
    std::map<double, bool> reject;  ///< level -> reject the null
    std::vector<std::pair<std::string, double>> detail;
    std::vector<std::string> warnings;

    void set_decisions_from_pvalue(double p) {
        p_value = p;
        for (double level : {0.01, 0.05, 0.10}) reject[level] = (p <= level);
    }

    bool rejected_at(double level) const {
        auto it = reject.find(level);
        return it != reject.end() && it->second;
    }

    /// Stars mirror the table convention: stationarity / dependence
    /// significant at 10%, 5% and 1%.
    std::string stars() const {
        if (rejected_at(0.01)) return "***";
        if (rejected_at(0.05)) return "**";
        if (rejected_at(0.10)) return "*";
        return "";
    }
};

}  // namespace diag
}  // namespace panelkit
