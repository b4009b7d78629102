#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "panelkit/model_spec.hpp"
#include "panelkit/panel.hpp"

namespace panelkit {
namespace pmg {

/// Per-group regression matrices for the error-correction equation, rows
/// already complete (listwise deletion applied).
struct GroupDesign {
    std::string entity;
    std::vector<int> row_periods;  ///< usable period labels, ascending
    Eigen::VectorXd dy;            ///< dependent first difference
    Eigen::VectorXd z_lag;         ///< lagged dependent level
    Eigen::MatrixXd x_levels;      ///< long-run regressor levels in the EC term
    Eigen::MatrixXd w;             ///< short-run block: difference lags + intercept
    std::vector<std::string> w_names;

    long n_rows() const { return dy.size(); }
};

struct ECMDesign {
    ModelSpec spec;
    std::vector<std::string> long_run_names;
    std::vector<GroupDesign> groups;
    std::vector<std::string> warnings;  ///< excluded groups and why
};

/// Number of usable design rows an entity contributes under `spec`.
///
/// A row at period t is usable when every required cell is present — the
/// dependent at t..t-p, regressor levels at t..t-q, control levels at t..t-q —
/// and t lies past the sample adjustment: lagging consumes p periods and
/// differencing one more per distributed lag, so the first p+q periods of the
/// panel axis never produce rows.
int usable_rows(const PanelDataset& data, const ModelSpec& spec, std::size_t entity);

/// Realizes the error-correction design from a panel. Groups with fewer than
/// per-group-parameters + 1 usable rows are excluded with a warning; an empty
/// design or a zero-variance regressor column is an error.
ECMDesign build_ecm_design(const PanelDataset& data, const ModelSpec& spec);

}  // namespace pmg
}  // namespace panelkit
