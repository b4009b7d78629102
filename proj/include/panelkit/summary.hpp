#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {
namespace report {

struct VariableSummary {
    std::string name;
    long n_obs = 0;
    double mean = kNaN;
    double sd = kNaN;  ///< sample standard deviation; NaN for a single value
    double min = kNaN;
    double max = kNaN;
};

struct SummaryStats {
    std::vector<VariableSummary> rows;
};

/// Per-variable mean, standard deviation, minimum and maximum over all
/// non-missing cells; variables in the conventional table order.
SummaryStats summary_stats(const PanelDataset& panel);

struct CorrelationMatrix {
    std::vector<std::string> names;
    Eigen::MatrixXd r;  ///< pairwise-complete Pearson; NaN when undefined
    std::vector<std::string> footnotes;
};

/// Pairwise Pearson correlations over pairwise-complete observations, unit
/// diagonal; pairs with fewer than 2 overlapping observations get a NaN cell
/// and a footnote.
CorrelationMatrix correlation_matrix(const PanelDataset& panel);

/// Variables in the order the tables print them: the conventional roster
/// (z-scores, oil variables, valuation, controls) first, then everything else
/// in panel insertion order.
std::vector<std::string> table_variable_order(const PanelDataset& panel);

}  // namespace report
}  // namespace panelkit
