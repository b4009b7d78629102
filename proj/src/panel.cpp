#include "panelkit/panel.hpp"

#include <algorithm>

namespace panelkit {

PanelDataset::PanelDataset(std::vector<std::string> entities, std::vector<int> periods)
    : entities_(std::move(entities)), periods_(std::move(periods)) {
    if (!std::is_sorted(entities_.begin(), entities_.end()) ||
        std::adjacent_find(entities_.begin(), entities_.end()) != entities_.end()) {
        throw DataError("entity identifiers must be unique and sorted");
    }
    for (std::size_t t = 1; t < periods_.size(); ++t) {
        if (periods_[t] != periods_[t - 1] + 1) {
            throw DataError("period labels must be consecutive integers");
        }
    }
}

std::size_t PanelDataset::entity_index(const std::string& name) const {
    auto it = std::lower_bound(entities_.begin(), entities_.end(), name);
    if (it == entities_.end() || *it != name) {
        throw UsageError("unknown entity: " + name);
    }
    return static_cast<std::size_t>(it - entities_.begin());
}

std::size_t PanelDataset::period_index(int period) const {
    if (periods_.empty() || period < periods_.front() || period > periods_.back()) {
        throw UsageError("period " + std::to_string(period) + " outside panel range");
    }
    return static_cast<std::size_t>(period - periods_.front());
}

bool PanelDataset::has_variable(const std::string& name) const {
    return grids_.count(name) != 0;
}

void PanelDataset::add_variable(const std::string& name) {
    if (name.empty()) throw UsageError("variable name must be non-empty");
    if (has_variable(name)) throw UsageError("variable already exists: " + name);
    Grid g;
    g.v.assign(entities_.size() * periods_.size(), kNaN);
    g.m.assign(entities_.size() * periods_.size(), 0);
    grids_.emplace(name, std::move(g));
    var_names_.push_back(name);
}

const PanelDataset::Grid& PanelDataset::grid(const std::string& var) const {
    auto it = grids_.find(var);
    if (it == grids_.end()) throw UsageError("unknown variable: " + var);
    return it->second;
}

PanelDataset::Grid& PanelDataset::grid(const std::string& var) {
    auto it = grids_.find(var);
    if (it == grids_.end()) throw UsageError("unknown variable: " + var);
    return it->second;
}

double PanelDataset::value(const std::string& var, std::size_t i, std::size_t t) const {
    return grid(var).v[cell(i, t)];
}

bool PanelDataset::is_present(const std::string& var, std::size_t i, std::size_t t) const {
    return grid(var).m[cell(i, t)] != 0;
}

void PanelDataset::set(const std::string& var, std::size_t i, std::size_t t, double v) {
    Grid& g = grid(var);
    g.v[cell(i, t)] = v;
    g.m[cell(i, t)] = 1;
}

void PanelDataset::clear(const std::string& var, std::size_t i, std::size_t t) {
    Grid& g = grid(var);
    g.v[cell(i, t)] = kNaN;
    g.m[cell(i, t)] = 0;
}

Series PanelDataset::entity_series(const std::string& var, std::size_t i) const {
    const Grid& g = grid(var);
    Series s(periods_.size());
    for (std::size_t t = 0; t < periods_.size(); ++t) {
        if (g.m[cell(i, t)]) s.set(t, g.v[cell(i, t)]);
    }
    return s;
}

void PanelDataset::set_entity_series(const std::string& var, std::size_t i, const Series& s) {
    if (s.size() != periods_.size()) {
        throw UsageError("series length does not match panel period axis");
    }
    Grid& g = grid(var);
    for (std::size_t t = 0; t < periods_.size(); ++t) {
        if (s.has(t)) {
            g.v[cell(i, t)] = s.at(t);
            g.m[cell(i, t)] = 1;
        } else {
            g.v[cell(i, t)] = kNaN;
            g.m[cell(i, t)] = 0;
        }
    }
}

bool PanelDataset::cross_section_invariant(const std::string& var) const {
    const Grid& g = grid(var);
    for (std::size_t t = 0; t < periods_.size(); ++t) {
        bool seen = false;
        double ref = 0.0;
        for (std::size_t i = 0; i < entities_.size(); ++i) {
            if (!g.m[cell(i, t)]) continue;
            if (!seen) {
                ref = g.v[cell(i, t)];
                seen = true;
            } else if (g.v[cell(i, t)] != ref) {
                return false;
            }
        }
    }
    return true;
}

PanelDataset PanelDataset::without_entity(const std::string& entity) const {
    std::size_t drop = entity_index(entity);
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        if (i != drop) kept.push_back(entities_[i]);
    }
    if (kept.empty()) throw DataError("cannot drop the only entity in the panel");
    PanelDataset out(kept, periods_);
    for (const auto& name : var_names_) {
        out.add_variable(name);
        std::size_t j = 0;
        for (std::size_t i = 0; i < entities_.size(); ++i) {
            if (i == drop) continue;
            for (std::size_t t = 0; t < periods_.size(); ++t) {
                if (is_present(name, i, t)) out.set(name, j, t, value(name, i, t));
            }
            ++j;
        }
    }
    return out;
}

bool PanelDataset::operator==(const PanelDataset& o) const {
    if (entities_ != o.entities_ || periods_ != o.periods_ || var_names_ != o.var_names_) {
        return false;
    }
    for (const auto& name : var_names_) {
        for (std::size_t i = 0; i < entities_.size(); ++i) {
            for (std::size_t t = 0; t < periods_.size(); ++t) {
                if (is_present(name, i, t) != o.is_present(name, i, t)) return false;
                if (is_present(name, i, t) && value(name, i, t) != o.value(name, i, t)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<double> PanelMatrix::contiguous_row(std::size_t i) const {
    std::size_t best_start = 0, best_len = 0;
    std::size_t start = 0, len = 0;
    for (std::size_t t = 0; t <= n_periods; ++t) {
        if (t < n_periods && has(i, t)) {
            if (len == 0) start = t;
            ++len;
        } else {
            if (len > best_len) {
                best_len = len;
                best_start = start;
            }
            len = 0;
        }
    }
    std::vector<double> out;
    out.reserve(best_len);
    for (std::size_t t = best_start; t < best_start + best_len; ++t) out.push_back(at(i, t));
    return out;
}

PanelMatrix PanelMatrix::from(const PanelDataset& panel, const std::string& var) {
    PanelMatrix pm(panel.n_entities(), panel.n_periods());
    for (std::size_t i = 0; i < panel.n_entities(); ++i) {
        for (std::size_t t = 0; t < panel.n_periods(); ++t) {
            if (panel.is_present(var, i, t)) pm.set(i, t, panel.value(var, i, t));
        }
    }
    return pm;
}

}  // namespace panelkit
