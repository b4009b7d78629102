#pragma once

#include <cstddef>
#include <vector>

#include "panelkit/common.hpp"

namespace panelkit {

/// One variable observed over an ordered period axis, with per-cell missing flags.
/// Values at absent positions are NaN; `present` is the authoritative mask.
struct Series {
    std::vector<double> values;
    std::vector<char> present;

    Series() = default;
    explicit Series(std::size_t n) : values(n, kNaN), present(n, 0) {}

    static Series all_missing(std::size_t n) { return Series(n); }

    std::size_t size() const { return values.size(); }

    bool has(std::size_t t) const { return present[t] != 0; }
    double at(std::size_t t) const { return values[t]; }

    void set(std::size_t t, double v) {
        values[t] = v;
        present[t] = 1;
    }
    void clear(std::size_t t) {
        values[t] = kNaN;
        present[t] = 0;
    }

    std::size_t count_present() const {
        std::size_t c = 0;
        for (char p : present) c += (p != 0);
        return c;
    }

    bool operator==(const Series& o) const {
        if (values.size() != o.values.size()) return false;
        for (std::size_t t = 0; t < values.size(); ++t) {
            if (has(t) != o.has(t)) return false;
            if (has(t) && values[t] != o.values[t]) return false;
        }
        return true;
    }
};

}  // namespace panelkit
