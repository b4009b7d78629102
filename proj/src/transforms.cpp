#include "panelkit/transforms.hpp"

#include <cmath>
#include <string>

namespace panelkit {

namespace {

std::string period_label(std::span<const int> periods, std::size_t t) {
    if (t < periods.size()) return std::to_string(periods[t]);
    return "index " + std::to_string(t);
}

void require_positive(const Series& s, std::span<const int> periods, const char* op) {
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s.has(t) && !(s.at(t) > 0.0)) {
            throw DataError(std::string(op) + ": non-positive value at period " +
                            period_label(periods, t));
        }
    }
}

}  // namespace

Series log_return(const Series& s, std::span<const int> periods) {
    require_positive(s, periods, "log_return");
    Series out(s.size());
    for (std::size_t t = 1; t < s.size(); ++t) {
        if (s.has(t) && s.has(t - 1)) {
            out.set(t, std::log(s.at(t) / s.at(t - 1)));
        }
    }
    return out;
}

Series natural_log(const Series& s, std::span<const int> periods) {
    require_positive(s, periods, "natural_log");
    Series out(s.size());
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s.has(t)) out.set(t, std::log(s.at(t)));
    }
    return out;
}

}  // namespace panelkit
