#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "panelkit/series.hpp"

namespace panelkit {

enum class VariableRole {
    Dependent,
    LongRunRegressor,
    ShortRunControl,
    RawInput,
    Derived,
};

struct VariableMeta {
    std::string name;
    VariableRole role = VariableRole::RawInput;
    std::string description;
    bool cross_section_invariant = false;
};

/// Rectangular entity x period store of named variable grids.
///
/// Entities and periods are unique and sorted; periods are consecutive integers
/// (years), with gaps materialized as all-missing columns. All grids share the
/// same N x T shape. The dataset is safe to share read-only across threads;
/// mutation (loading, derivation) is single-threaded by contract.
class PanelDataset {
public:
    PanelDataset() = default;
    PanelDataset(std::vector<std::string> entities, std::vector<int> periods);

    std::size_t n_entities() const { return entities_.size(); }
    std::size_t n_periods() const { return periods_.size(); }

    const std::vector<std::string>& entities() const { return entities_; }
    const std::vector<int>& periods() const { return periods_; }

    /// Index of an entity / period label; throws UsageError when unknown.
    std::size_t entity_index(const std::string& name) const;
    std::size_t period_index(int period) const;

    bool has_variable(const std::string& name) const;
    /// Variable names in insertion order.
    const std::vector<std::string>& variable_names() const { return var_names_; }

    /// Registers an all-missing grid for `name`; throws on duplicates.
    void add_variable(const std::string& name);

    double value(const std::string& var, std::size_t i, std::size_t t) const;
    bool is_present(const std::string& var, std::size_t i, std::size_t t) const;

    void set(const std::string& var, std::size_t i, std::size_t t, double v);
    void clear(const std::string& var, std::size_t i, std::size_t t);

    /// Copy of one entity's row for `var`, aligned with periods().
    Series entity_series(const std::string& var, std::size_t i) const;
    void set_entity_series(const std::string& var, std::size_t i, const Series& s);

    /// True when every period's non-missing values agree across entities
    /// (macro series duplicated per entity, e.g. gdp, bc, rq, cpi).
    bool cross_section_invariant(const std::string& var) const;

    /// Drops one entity, keeping everything else; throws when unknown.
    PanelDataset without_entity(const std::string& entity) const;

    bool operator==(const PanelDataset& o) const;

private:
    struct Grid {
        std::vector<double> v;
        std::vector<char> m;
    };

    const Grid& grid(const std::string& var) const;
    Grid& grid(const std::string& var);
    std::size_t cell(std::size_t i, std::size_t t) const { return i * periods_.size() + t; }

    std::vector<std::string> entities_;
    std::vector<int> periods_;
    std::vector<std::string> var_names_;
    std::map<std::string, Grid> grids_;
};

/// Lightweight N x T view of a single variable, the shape consumed by the
/// panel diagnostics and Monte Carlo drivers.
struct PanelMatrix {
    std::size_t n_entities = 0;
    std::size_t n_periods = 0;
    std::vector<double> v;  // row-major, NaN where absent
    std::vector<char> m;

    PanelMatrix() = default;
    PanelMatrix(std::size_t n, std::size_t t)
        : n_entities(n), n_periods(t), v(n * t, kNaN), m(n * t, 0) {}

    double at(std::size_t i, std::size_t t) const { return v[i * n_periods + t]; }
    bool has(std::size_t i, std::size_t t) const { return m[i * n_periods + t] != 0; }
    void set(std::size_t i, std::size_t t, double x) {
        v[i * n_periods + t] = x;
        m[i * n_periods + t] = 1;
    }

    /// Longest contiguous run of non-missing values for entity i, as a plain vector.
    std::vector<double> contiguous_row(std::size_t i) const;

    static PanelMatrix from(const PanelDataset& panel, const std::string& var);
};

}  // namespace panelkit
