#pragma once

#include "panelkit/run_config.hpp"

namespace panelkit {
namespace report {

struct RunMeta {
    std::uint64_t config_hash = 0;
    std::uint64_t input_hash = 0;
    std::uint64_t seed = 0;
    std::string version;
};

/// Everything one replication run produces: descriptive tables, the
/// diagnostic battery, and one estimation cell per (shock variant, model).
struct ReportBundle {
    SummaryStats summary;
    CorrelationMatrix correlation;
    std::vector<CdTestRow> cd_tests;
    std::vector<UnitRootRow> unit_roots;
    std::vector<EstimationCell> cells;
    RunMeta meta;
    std::vector<std::string> warnings;
};

/// Loads or simulates the input panel per the config, applies derivations and
/// entity drops, and estimates the requested grid. A model that fails to
/// converge becomes a failure cell, not a run abort.
ReportBundle run_replication(const RunConfig& config);

/// Same, on an already-loaded panel (input_hash goes into the metadata).
ReportBundle run_replication(const RunConfig& config, const PanelDataset& panel,
                             std::uint64_t input_hash);

/// Applies the configured derivations (ROA, z-scores, oil return and shock
/// decomposition) to a panel in place.
void apply_derivations(PanelDataset& panel, const RunConfig& config);

/// The estimation grid's model spec for one (variant, model) cell.
pmg::ModelSpec grid_spec(const RunConfig& config, const std::string& variant, int model);

/// Serializes every table in the requested formats under `dir`; file names
/// are deterministic. Returns the paths written.
std::vector<std::string> write_bundle(const ReportBundle& bundle, const std::string& dir,
                                      const std::vector<OutputFormat>& formats);

/// Whole bundle as one text document in table order.
std::string bundle_to_text(const ReportBundle& bundle);

}  // namespace report
}  // namespace panelkit
