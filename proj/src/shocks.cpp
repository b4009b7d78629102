#include "panelkit/shocks.hpp"

#include <algorithm>

namespace panelkit {
namespace indicators {

namespace {

void check_lookback(int lookback) {
    if (lookback < 1) throw UsageError("shock decomposition lookback must be >= 1");
}

// True when all of price[t-1 .. t-lookback] and price[t] are available.
bool window_complete(const Series& s, std::size_t t, int lookback) {
    if (t < static_cast<std::size_t>(lookback)) return false;
    if (!s.has(t)) return false;
    for (int j = 1; j <= lookback; ++j) {
        if (!s.has(t - j)) return false;
    }
    return true;
}

}  // namespace

ShockSeries shock_decompose(const Series& price, int lookback) {
    check_lookback(lookback);
    ShockSeries out;
    out.positive = Series(price.size());
    out.negative = Series(price.size());
    out.base = Series(price.size());
    for (std::size_t t = 0; t < price.size(); ++t) {
        if (!window_complete(price, t, lookback)) continue;
        double sum = 0.0;
        for (int j = 1; j <= lookback; ++j) sum += price.at(t - j);
        double base = sum / lookback;
        double dev = price.at(t) - base;
        out.base.set(t, base);
        out.positive.set(t, price.at(t) > base ? dev : 0.0);
        out.negative.set(t, price.at(t) < base ? dev : 0.0);
    }
    return out;
}

ShockSeries shock_decompose_hamilton(const Series& price, int lookback) {
    check_lookback(lookback);
    ShockSeries out;
    out.positive = Series(price.size());
    out.negative = Series(price.size());
    out.base = Series(price.size());
    for (std::size_t t = 0; t < price.size(); ++t) {
        if (!window_complete(price, t, lookback)) continue;
        double hi = price.at(t - 1), lo = price.at(t - 1);
        for (int j = 2; j <= lookback; ++j) {
            hi = std::max(hi, price.at(t - j));
            lo = std::min(lo, price.at(t - j));
        }
        out.base.set(t, hi);  // baseline of the positive branch
        out.positive.set(t, std::max(price.at(t) - hi, 0.0));
        out.negative.set(t, std::min(price.at(t) - lo, 0.0));
    }
    return out;
}

}  // namespace indicators
}  // namespace panelkit
