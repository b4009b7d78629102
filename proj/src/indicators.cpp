#include "panelkit/indicators.hpp"

#include <string>

namespace panelkit {
namespace indicators {

namespace {

std::string period_label(std::span<const int> periods, std::size_t t) {
    if (t < periods.size()) return std::to_string(periods[t]);
    return "index " + std::to_string(t);
}

ZScoreSeries zscore_impl(const Series& capital_component, const Series& roa,
                         const RollingWindowConfig& config) {
    Series mu_roa = rolling_mean(roa, config);
    Series sigma_roa = rolling_std(roa, config);
    ZScoreSeries out;
    out.values = Series(roa.size());
    out.degenerate.assign(roa.size(), 0);
    for (std::size_t t = 0; t < roa.size(); ++t) {
        if (!capital_component.has(t) || !mu_roa.has(t) || !sigma_roa.has(t)) continue;
        if (sigma_roa.at(t) == 0.0) {
            out.degenerate[t] = 1;
            continue;
        }
        out.values.set(t, (capital_component.at(t) + mu_roa.at(t)) / sigma_roa.at(t));
    }
    return out;
}

}  // namespace

Series compute_roa(const Series& net_income, const Series& total_assets,
                   std::span<const int> periods) {
    if (net_income.size() != total_assets.size()) {
        throw UsageError("compute_roa: input series lengths differ");
    }
    Series out(net_income.size());
    for (std::size_t t = 0; t < net_income.size(); ++t) {
        if (total_assets.has(t) && !(total_assets.at(t) > 0.0)) {
            throw DataError("compute_roa: non-positive total assets at period " +
                            period_label(periods, t));
        }
        if (net_income.has(t) && total_assets.has(t)) {
            out.set(t, net_income.at(t) / total_assets.at(t));
        }
    }
    return out;
}

ZScoreSeries zscore_boyd(const Series& car, const Series& roa,
                         const RollingWindowConfig& config) {
    if (car.size() != roa.size()) throw UsageError("zscore_boyd: input series lengths differ");
    Series mu_car = rolling_mean(car, config);
    return zscore_impl(mu_car, roa, config);
}

ZScoreSeries zscore_yeyati(const Series& car, const Series& roa,
                           const RollingWindowConfig& config) {
    if (car.size() != roa.size()) throw UsageError("zscore_yeyati: input series lengths differ");
    return zscore_impl(car, roa, config);
}

}  // namespace indicators
}  // namespace panelkit
