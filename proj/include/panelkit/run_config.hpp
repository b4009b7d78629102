#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "panelkit/dgp.hpp"
#include "panelkit/pmg.hpp"
#include "panelkit/render.hpp"
#include "panelkit/rolling.hpp"
#include "panelkit/unit_root.hpp"

namespace panelkit {
namespace report {

/// Run configuration: flat key=value lines, '#' comments, every key also
/// settable from the command line. The grammar is documented in the README.
struct RunConfig {
    // Exactly one input source: a CSV path or a simulation mode.
    std::optional<std::string> input_path;
    std::optional<std::string> simulate_mode;  ///< ecm | replication

    std::string entity_col = "entity";
    std::string period_col = "period";

    std::string zscore_variant = "boyd";  ///< boyd -> z1, yeyati -> z2
    std::vector<std::string> shock_variants{"returns", "positive", "negative"};
    std::vector<int> models{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::string> controls{"nim", "nocf", "lr", "ta", "gdp", "bc", "rq", "cpi"};
    std::string returns_var = "wti";
    std::string positive_var = "wti_pos";
    std::string negative_var = "wti_neg";
    std::string valuation_var = "pbvr";
    std::optional<std::string> dependent_override;

    int p = 1;
    int q = 1;
    std::optional<std::string> drop_entity;

    indicators::RollingWindowConfig window;
    int shock_lookback = 3;
    // Raw-column mapping for the derive step (empty = not derivable).
    std::string derive_car;
    std::string derive_net_income;
    std::string derive_total_assets;
    std::string derive_price;

    diag::UnitRootSpec unit_root;
    pmg::PMGOptions pmg_options;
    sim::DGPParams dgp;

    std::uint64_t seed = 20240101;
    std::string out_dir = "out";
    std::vector<OutputFormat> formats{OutputFormat::Text};

    // Monte Carlo subcommand knobs.
    std::string mc_procedure = "pmg_recovery";
    int mc_reps = 200;

    std::string dependent() const { return dependent_override.value_or(
        zscore_variant == "yeyati" ? "z2" : "z1"); }
    std::string shock_var(const std::string& variant) const;

    void apply_kv(const std::string& key, const std::string& value);
    void validate() const;
    /// Stable content hash over the canonical key=value form.
    std::uint64_t hash() const;
    std::string canonical_text() const;

    static RunConfig from_file(const std::string& path);
    static RunConfig from_text(const std::string& text);
};

/// FNV-1a over a byte string; used for config and input hashes in run metadata.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace report
}  // namespace panelkit
