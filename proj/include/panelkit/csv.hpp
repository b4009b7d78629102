#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "panelkit/panel.hpp"

namespace panelkit {

/// Column mapping for long-format panel CSV: one row per (entity, period),
/// variables as columns. Unmapped value columns load under their header names;
/// `renames` maps a CSV header to a different variable name.
struct CsvSchema {
    std::string entity_col = "entity";
    std::string period_col = "period";
    std::map<std::string, std::string> renames;
    /// When non-empty, only these CSV headers are loaded as variables.
    std::vector<std::string> value_cols;
};

/// Parses long-format CSV text into a PanelDataset.
///
/// The resulting grid covers the Cartesian product of observed entities and
/// the full consecutive period range; unobserved cells are missing. Missing
/// values are empty cells or the literal token NA. The result is invariant to
/// input row order; duplicate (entity, period) pairs are rejected.
PanelDataset load_panel(std::istream& in, const CsvSchema& schema = {});
PanelDataset load_panel_text(const std::string& text, const CsvSchema& schema = {});
PanelDataset load_panel_file(const std::string& path, const CsvSchema& schema = {});

/// Emits the dataset in the same long CSV format, rows sorted by
/// (entity, period), numbers in shortest round-trip form, missing cells empty.
void write_panel_csv(const PanelDataset& panel, std::ostream& out, const CsvSchema& schema = {});
std::string panel_to_csv(const PanelDataset& panel, const CsvSchema& schema = {});

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

}  // namespace panelkit
