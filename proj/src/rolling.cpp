#include "panelkit/rolling.hpp"

#include <algorithm>
#include <cmath>

namespace panelkit {
namespace indicators {

void RollingWindowConfig::validate() const {
    if (n < 2) throw UsageError("rolling window length must be at least 2");
    if (min_obs < 2 || min_obs > n) {
        throw UsageError("rolling window min_obs must satisfy 2 <= min_obs <= n");
    }
}

Series rolling_mean(const Series& s, const RollingWindowConfig& config) {
    config.validate();
    Series out(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        std::size_t lo = (t + 1 >= static_cast<std::size_t>(config.n))
                             ? t + 1 - static_cast<std::size_t>(config.n)
                             : 0;
        double sum = 0.0;
        int count = 0;
        for (std::size_t u = lo; u <= t; ++u) {
            if (s.has(u)) {
                sum += s.at(u);
                ++count;
            }
        }
        if (count >= config.min_obs) out.set(t, sum / count);
    }
    return out;
}

Series rolling_std(const Series& s, const RollingWindowConfig& config) {
    config.validate();
    const int needed = std::max(config.min_obs, 2);
    Series out(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        std::size_t lo = (t + 1 >= static_cast<std::size_t>(config.n))
                             ? t + 1 - static_cast<std::size_t>(config.n)
                             : 0;
        double sum = 0.0;
        int count = 0;
        for (std::size_t u = lo; u <= t; ++u) {
            if (s.has(u)) {
                sum += s.at(u);
                ++count;
            }
        }
        if (count < needed) continue;
        double mean = sum / count;
        double ss = 0.0;
        for (std::size_t u = lo; u <= t; ++u) {
            if (s.has(u)) {
                double d = s.at(u) - mean;
                ss += d * d;
            }
        }
        int divisor = config.population_std ? count : count - 1;
        out.set(t, std::sqrt(ss / divisor));
    }
    return out;
}

}  // namespace indicators
}  // namespace panelkit
