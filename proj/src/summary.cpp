#include "panelkit/summary.hpp"

#include <algorithm>
#include <cmath>

namespace panelkit {
namespace report {

std::vector<std::string> table_variable_order(const PanelDataset& panel) {
    static const char* kCanonical[] = {"z1",  "z2", "wti", "wti_pos", "wti_neg", "pbvr", "nim",
                                       "nocf", "lr", "ta",  "gdp",     "bc",      "rq",   "cpi"};
    std::vector<std::string> out;
    for (const char* name : kCanonical) {
        if (panel.has_variable(name)) out.emplace_back(name);
    }
    for (const auto& name : panel.variable_names()) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    }
    return out;
}

SummaryStats summary_stats(const PanelDataset& panel) {
    SummaryStats stats;
    for (const auto& name : table_variable_order(panel)) {
        VariableSummary row;
        row.name = name;
        double sum = 0.0;
        for (std::size_t i = 0; i < panel.n_entities(); ++i) {
            for (std::size_t t = 0; t < panel.n_periods(); ++t) {
                if (!panel.is_present(name, i, t)) continue;
                double v = panel.value(name, i, t);
                if (row.n_obs == 0) {
                    row.min = row.max = v;
                } else {
                    row.min = std::min(row.min, v);
                    row.max = std::max(row.max, v);
                }
                sum += v;
                ++row.n_obs;
            }
        }
        if (row.n_obs > 0) {
            row.mean = sum / static_cast<double>(row.n_obs);
            if (row.n_obs > 1) {
                double ss = 0.0;
                for (std::size_t i = 0; i < panel.n_entities(); ++i) {
                    for (std::size_t t = 0; t < panel.n_periods(); ++t) {
                        if (!panel.is_present(name, i, t)) continue;
                        double d = panel.value(name, i, t) - row.mean;
                        ss += d * d;
                    }
                }
                row.sd = std::sqrt(ss / static_cast<double>(row.n_obs - 1));
            }
        }
        stats.rows.push_back(row);
    }
    return stats;
}

CorrelationMatrix correlation_matrix(const PanelDataset& panel) {
    CorrelationMatrix cm;
    cm.names = table_variable_order(panel);
    const std::size_t k = cm.names.size();
    cm.r = Eigen::MatrixXd::Constant(static_cast<long>(k), static_cast<long>(k), kNaN);

    for (std::size_t a = 0; a < k; ++a) {
        cm.r(static_cast<long>(a), static_cast<long>(a)) = 1.0;
        for (std::size_t b = 0; b < a; ++b) {
            double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
            long n = 0;
            for (std::size_t i = 0; i < panel.n_entities(); ++i) {
                for (std::size_t t = 0; t < panel.n_periods(); ++t) {
                    if (!panel.is_present(cm.names[a], i, t) ||
                        !panel.is_present(cm.names[b], i, t)) {
                        continue;
                    }
                    double x = panel.value(cm.names[a], i, t);
                    double y = panel.value(cm.names[b], i, t);
                    sx += x;
                    sy += y;
                    sxx += x * x;
                    syy += y * y;
                    sxy += x * y;
                    ++n;
                }
            }
            if (n < 2) {
                cm.footnotes.push_back("(" + cm.names[a] + ", " + cm.names[b] +
                                       "): fewer than 2 overlapping observations");
                continue;
            }
            double nn = static_cast<double>(n);
            double cov = sxy - sx * sy / nn;
            double vx = sxx - sx * sx / nn;
            double vy = syy - sy * sy / nn;
            if (vx <= 0.0 || vy <= 0.0) {
                cm.footnotes.push_back("(" + cm.names[a] + ", " + cm.names[b] +
                                       "): zero variance in the overlap");
                continue;
            }
            double r = cov / std::sqrt(vx * vy);
            cm.r(static_cast<long>(a), static_cast<long>(b)) = r;
            cm.r(static_cast<long>(b), static_cast<long>(a)) = r;
        }
    }
    return cm;
}

}  // namespace report
}  // namespace panelkit
