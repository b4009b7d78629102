#include "panelkit/ecm_design.hpp"

#include <cmath>

namespace panelkit {
namespace pmg {

namespace {

bool row_usable(const PanelDataset& data, const ModelSpec& spec, std::size_t i, std::size_t t) {
    const std::size_t adjust = static_cast<std::size_t>(spec.p + spec.q);
    if (t < adjust) return false;
    for (int j = 0; j <= spec.p; ++j) {
        if (!data.is_present(spec.dependent, i, t - static_cast<std::size_t>(j))) return false;
    }
    const int x_back = std::max(spec.q, spec.ec_lagged_x ? 1 : 0);
    for (const auto& v : spec.long_run) {
        for (int j = 0; j <= x_back; ++j) {
            if (!data.is_present(v, i, t - static_cast<std::size_t>(j))) return false;
        }
    }
    for (const auto& v : spec.short_run_controls) {
        for (int j = 0; j <= spec.q; ++j) {
            if (!data.is_present(v, i, t - static_cast<std::size_t>(j))) return false;
        }
    }
    return true;
}

void require_variables(const PanelDataset& data, const ModelSpec& spec) {
    auto need = [&](const std::string& v) {
        if (!data.has_variable(v)) {
            throw UsageError("model variable not found in panel: " + v);
        }
    };
    need(spec.dependent);
    for (const auto& v : spec.long_run) need(v);
    for (const auto& v : spec.short_run_controls) need(v);
}

double column_variance(const Eigen::VectorXd& col) {
    if (col.size() < 2) return 0.0;
    double mean = col.mean();
    return (col.array() - mean).square().sum() / static_cast<double>(col.size() - 1);
}

}  // namespace

int usable_rows(const PanelDataset& data, const ModelSpec& spec, std::size_t entity) {
    spec.validate();
    require_variables(data, spec);
    int count = 0;
    for (std::size_t t = 0; t < data.n_periods(); ++t) {
        if (row_usable(data, spec, entity, t)) ++count;
    }
    return count;
}

ECMDesign build_ecm_design(const PanelDataset& data, const ModelSpec& spec) {
    spec.validate();
    require_variables(data, spec);

    const int k = static_cast<int>(spec.long_run.size());
    const int m = static_cast<int>(spec.short_run_controls.size());
    const int n_w = (spec.p - 1) + spec.q * k + spec.q * m + (spec.intercept ? 1 : 0);
    const int min_rows = spec.per_group_params() + 1;

    ECMDesign design;
    design.spec = spec;
    design.long_run_names = spec.long_run;

    for (std::size_t i = 0; i < data.n_entities(); ++i) {
        std::vector<std::size_t> usable;
        for (std::size_t t = 0; t < data.n_periods(); ++t) {
            if (row_usable(data, spec, i, t)) usable.push_back(t);
        }
        if (static_cast<int>(usable.size()) < min_rows) {
            design.warnings.push_back("entity '" + data.entities()[i] + "' excluded: " +
                                      std::to_string(usable.size()) + " usable rows, need " +
                                      std::to_string(min_rows));
            continue;
        }

        GroupDesign g;
        g.entity = data.entities()[i];
        const long rows = static_cast<long>(usable.size());
        g.dy.resize(rows);
        g.z_lag.resize(rows);
        g.x_levels.resize(rows, k);
        g.w.resize(rows, n_w);

        auto val = [&](const std::string& v, std::size_t t) { return data.value(v, i, t); };
        auto diff = [&](const std::string& v, std::size_t t) {
            return data.value(v, i, t) - data.value(v, i, t - 1);
        };

        for (long r = 0; r < rows; ++r) {
            const std::size_t t = usable[static_cast<std::size_t>(r)];
            g.row_periods.push_back(data.periods()[t]);
            g.dy[r] = diff(spec.dependent, t);
            g.z_lag[r] = val(spec.dependent, t - 1);
            for (int c = 0; c < k; ++c) {
                g.x_levels(r, c) = val(spec.long_run[static_cast<std::size_t>(c)],
                                       spec.ec_lagged_x ? t - 1 : t);
            }
            int col = 0;
            for (int j = 1; j <= spec.p - 1; ++j) {
                g.w(r, col++) = diff(spec.dependent, t - static_cast<std::size_t>(j));
            }
            for (const auto& v : spec.long_run) {
                for (int j = 0; j <= spec.q - 1; ++j) {
                    g.w(r, col++) = diff(v, t - static_cast<std::size_t>(j));
                }
            }
            for (const auto& v : spec.short_run_controls) {
                for (int j = 0; j <= spec.q - 1; ++j) {
                    g.w(r, col++) = diff(v, t - static_cast<std::size_t>(j));
                }
            }
            if (spec.intercept) g.w(r, col++) = 1.0;
        }

        if (g.w_names.empty()) {
            for (int j = 1; j <= spec.p - 1; ++j) {
                g.w_names.push_back("d." + spec.dependent + "(-" + std::to_string(j) + ")");
            }
            for (const auto& v : spec.long_run) {
                for (int j = 0; j <= spec.q - 1; ++j) {
                    g.w_names.push_back(j == 0 ? "d." + v
                                               : "d." + v + "(-" + std::to_string(j) + ")");
                }
            }
            for (const auto& v : spec.short_run_controls) {
                for (int j = 0; j <= spec.q - 1; ++j) {
                    g.w_names.push_back(j == 0 ? "d." + v
                                               : "d." + v + "(-" + std::to_string(j) + ")");
                }
            }
            if (spec.intercept) g.w_names.push_back("c");
        }

        // Zero-variance regressors make the group equation unestimable; the
        // intercept column is the one constant allowed.
        if (column_variance(g.z_lag) == 0.0) {
            throw EstimationError("constant column '" + spec.dependent + "(-1)' in group '" +
                                  g.entity + "'");
        }
        for (int c = 0; c < k; ++c) {
            if (column_variance(g.x_levels.col(c)) == 0.0) {
                throw EstimationError("constant column '" + spec.long_run[static_cast<std::size_t>(c)] +
                                      "' in group '" + g.entity + "'");
            }
        }
        for (int c = 0; c < n_w - (spec.intercept ? 1 : 0); ++c) {
            if (column_variance(g.w.col(c)) == 0.0) {
                throw EstimationError("constant column '" + g.w_names[static_cast<std::size_t>(c)] +
                                      "' in group '" + g.entity + "'");
            }
        }

        design.groups.push_back(std::move(g));
    }

    if (design.groups.empty()) {
        throw DataError("no group has enough usable observations for the requested model");
    }
    return design;
}

}  // namespace pmg
}  // namespace panelkit
