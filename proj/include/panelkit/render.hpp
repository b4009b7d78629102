#pragma once

#include <optional>
#include <string>
#include <vector>

#include "panelkit/model_spec.hpp"
#include "panelkit/monte_carlo.hpp"
#include "panelkit/pmg.hpp"
#include "panelkit/summary.hpp"
#include "panelkit/test_result.hpp"
#include "panelkit/validate.hpp"

namespace panelkit {
namespace report {

enum class OutputFormat { Text, Csv, Json };

OutputFormat parse_format(const std::string& name);
std::string format_extension(OutputFormat f);

/// One estimated cell of the model grid: shock variant x model number, either
/// a fitted result or a structured failure.
struct EstimationCell {
    std::string variant;  ///< returns | positive | negative | custom
    int model_number = 1;
    std::string control;  ///< empty for the no-control model
    pmg::ModelSpec spec;
    std::optional<pmg::PMGResult> result;
    std::string failure;
};

struct CdTestRow {
    std::string variable;
    std::vector<diag::TestResult> tests;  ///< frees, friedman, pesaran
};

struct UnitRootRow {
    std::string variable;
    std::vector<diag::TestResult> tests;  ///< llc, ips, fisher_adf, fisher_pp
    bool degenerate = false;              ///< no cross-sectional variation
};

/// Text mimics the published table layout at 4 significant digits; csv and
/// json carry full precision plus standard errors.
std::string emit_estimation_table(const EstimationCell& cell, OutputFormat format);
std::string emit_summary_table(const SummaryStats& stats, OutputFormat format);
std::string emit_correlation_table(const CorrelationMatrix& corr, OutputFormat format);
std::string emit_cd_table(const std::vector<CdTestRow>& rows, OutputFormat format);
std::string emit_unit_root_table(const std::vector<UnitRootRow>& rows, OutputFormat format);
std::string emit_mc_report(const sim::MonteCarloReport& report, OutputFormat format);
std::string emit_validation_report(const ValidationReport& report, OutputFormat format);

/// 4-significant-digit display form used by the text tables.
std::string format_sig(double v);

}  // namespace report
}  // namespace panelkit
