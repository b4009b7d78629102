#include "panelkit/replicate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "panelkit/cross_section.hpp"
#include "panelkit/csv.hpp"
#include "panelkit/indicators.hpp"
#include "panelkit/shocks.hpp"
#include "panelkit/transforms.hpp"

namespace panelkit {
namespace report {

namespace {

constexpr const char* kVersion = "0.1.0";

void add_series_variable(PanelDataset& panel, const std::string& name) {
    if (!panel.has_variable(name)) panel.add_variable(name);
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

void apply_derivations(PanelDataset& panel, const RunConfig& config) {
    const auto periods = std::span<const int>(panel.periods());

    const bool want_roa = !config.derive_net_income.empty() &&
                          !config.derive_total_assets.empty();
    if (want_roa) add_series_variable(panel, "roa");
    const bool want_z = want_roa && !config.derive_car.empty();
    if (want_z) {
        add_series_variable(panel, "z1");
        add_series_variable(panel, "z2");
    }
    const bool want_shocks = !config.derive_price.empty();
    if (want_shocks) {
        add_series_variable(panel, config.returns_var);
        add_series_variable(panel, config.positive_var);
        add_series_variable(panel, config.negative_var);
    }

    for (std::size_t i = 0; i < panel.n_entities(); ++i) {
        if (want_roa) {
            Series roa = indicators::compute_roa(
                panel.entity_series(config.derive_net_income, i),
                panel.entity_series(config.derive_total_assets, i), periods);
            panel.set_entity_series("roa", i, roa);
            if (want_z) {
                Series car = panel.entity_series(config.derive_car, i);
                panel.set_entity_series(
                    "z1", i, indicators::zscore_boyd(car, roa, config.window).values);
                panel.set_entity_series(
                    "z2", i, indicators::zscore_yeyati(car, roa, config.window).values);
            }
        }
        if (want_shocks) {
            Series price = panel.entity_series(config.derive_price, i);
            panel.set_entity_series(config.returns_var, i, log_return(price, periods));
            indicators::ShockSeries shocks =
                indicators::shock_decompose(price, config.shock_lookback);
            panel.set_entity_series(config.positive_var, i, shocks.positive);
            panel.set_entity_series(config.negative_var, i, shocks.negative);
        }
    }
}

pmg::ModelSpec grid_spec(const RunConfig& config, const std::string& variant, int model) {
    if (model < 1 || model > 1 + static_cast<int>(config.controls.size())) {
        throw UsageError("model number " + std::to_string(model) + " out of range");
    }
    pmg::ModelSpec spec;
    spec.dependent = config.dependent();
    spec.long_run = {config.shock_var(variant), config.valuation_var};
    if (model >= 2) {
        spec.short_run_controls = {config.controls[static_cast<std::size_t>(model - 2)]};
    }
    spec.p = config.p;
    spec.q = config.q;
    return spec;
}

ReportBundle run_replication(const RunConfig& config) {
    config.validate();
    if (config.input_path) {
        const std::string bytes = read_file_bytes(*config.input_path);
        CsvSchema schema;
        schema.entity_col = config.entity_col;
        schema.period_col = config.period_col;
        PanelDataset panel = load_panel_text(bytes, schema);
        return run_replication(config, panel, fnv1a(bytes));
    }
    sim::DGPParams dgp = config.dgp;
    dgp.seed = config.seed;
    PanelDataset panel;
    if (*config.simulate_mode == "ecm") {
        panel = sim::simulate_ecm_panel(dgp);
    } else {
        sim::ReplicationDGPParams rp;
        rp.n_groups = dgp.n_groups;
        rp.n_periods = dgp.n_periods;
        rp.seed = config.seed;
        rp.shock_lookback = config.shock_lookback;
        panel = sim::simulate_replication_panel(rp);
    }
    return run_replication(config, panel, 0);
}

ReportBundle run_replication(const RunConfig& config, const PanelDataset& input,
                             std::uint64_t input_hash) {
    config.validate();
    ReportBundle bundle;
    bundle.meta.config_hash = config.hash();
    bundle.meta.input_hash = input_hash;
    bundle.meta.seed = config.seed;
    bundle.meta.version = kVersion;

    PanelDataset panel = input;
    apply_derivations(panel, config);
    if (config.drop_entity) panel = panel.without_entity(*config.drop_entity);

    bundle.summary = summary_stats(panel);
    bundle.correlation = correlation_matrix(panel);

    // Dependence tests on the dependent variable(s), as the published layout.
    for (const std::string name : {std::string("z1"), std::string("z2")}) {
        if (!panel.has_variable(name)) continue;
        PanelMatrix pm = PanelMatrix::from(panel, name);
        CdTestRow row;
        row.variable = name;
        for (auto* fn : {&diag::frees_cd, &diag::friedman_cd, &diag::pesaran_cd}) {
            try {
                row.tests.push_back((*fn)(pm));
            } catch (const std::exception& e) {
                bundle.warnings.push_back("cd test on " + name + " failed: " + e.what());
            }
        }
        bundle.cd_tests.push_back(std::move(row));
    }

    // Unit roots over every variable the grid touches.
    std::vector<std::string> ur_vars;
    auto add_ur = [&](const std::string& v) {
        if (panel.has_variable(v) &&
            std::find(ur_vars.begin(), ur_vars.end(), v) == ur_vars.end()) {
            ur_vars.push_back(v);
        }
    };
    add_ur(config.dependent());
    for (const auto& variant : config.shock_variants) add_ur(config.shock_var(variant));
    add_ur(config.valuation_var);
    for (const auto& c : config.controls) add_ur(c);
    for (const auto& v : ur_vars) {
        PanelMatrix pm = PanelMatrix::from(panel, v);
        UnitRootRow row;
        row.variable = v;
        row.degenerate = panel.n_entities() > 1 && panel.cross_section_invariant(v);
        try {
            row.tests.push_back(diag::llc_test(pm, config.unit_root));
            row.tests.push_back(diag::ips_test(pm, config.unit_root));
            row.tests.push_back(diag::fisher_combine(pm, config.unit_root,
                                                     diag::FisherMode::Adf));
            row.tests.push_back(diag::fisher_combine(pm, config.unit_root,
                                                     diag::FisherMode::Pp));
        } catch (const std::exception& e) {
            bundle.warnings.push_back("unit-root tests on " + v + " failed: " + e.what());
        }
        bundle.unit_roots.push_back(std::move(row));
    }

    for (const auto& variant : config.shock_variants) {
        for (int model : config.models) {
            EstimationCell cell;
            cell.variant = variant;
            cell.model_number = model;
            cell.control = model >= 2 ? config.controls[static_cast<std::size_t>(model - 2)]
                                      : std::string();
            cell.spec = grid_spec(config, variant, model);
            try {
                pmg::ECMDesign design = pmg::build_ecm_design(panel, cell.spec);
                cell.result = pmg::estimate_pmg(design, config.pmg_options);
            } catch (const std::exception& e) {
                cell.failure = e.what();
            }
            bundle.cells.push_back(std::move(cell));
        }
    }
    return bundle;
}

std::string bundle_to_text(const ReportBundle& bundle) {
    std::ostringstream os;
    os << "panelkit replication report (version " << bundle.meta.version << ")\n"
       << "config_hash=" << bundle.meta.config_hash << " input_hash=" << bundle.meta.input_hash
       << " seed=" << bundle.meta.seed << "\n\n";
    os << emit_summary_table(bundle.summary, OutputFormat::Text) << '\n';
    os << emit_correlation_table(bundle.correlation, OutputFormat::Text) << '\n';
    os << emit_cd_table(bundle.cd_tests, OutputFormat::Text) << '\n';
    os << emit_unit_root_table(bundle.unit_roots, OutputFormat::Text) << '\n';
    for (const auto& cell : bundle.cells) {
        os << emit_estimation_table(cell, OutputFormat::Text) << '\n';
    }
    for (const auto& w : bundle.warnings) os << "warning: " << w << '\n';
    return os.str();
}

std::vector<std::string> write_bundle(const ReportBundle& bundle, const std::string& dir,
                                      const std::vector<OutputFormat>& formats) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> written;
    auto emit = [&](const std::string& stem, auto&& render) {
        for (OutputFormat f : formats) {
            fs::path path = fs::path(dir) / (stem + "." + format_extension(f));
            std::ofstream out(path, std::ios::binary);
            if (!out) throw DataError("cannot write " + path.string());
            out << render(f);
            written.push_back(path.string());
        }
    };

    emit("summary", [&](OutputFormat f) { return emit_summary_table(bundle.summary, f); });
    emit("correlation",
         [&](OutputFormat f) { return emit_correlation_table(bundle.correlation, f); });
    emit("cd_tests", [&](OutputFormat f) { return emit_cd_table(bundle.cd_tests, f); });
    emit("unit_roots",
         [&](OutputFormat f) { return emit_unit_root_table(bundle.unit_roots, f); });
    for (const auto& cell : bundle.cells) {
        emit("estimation_" + cell.variant + "_model" + std::to_string(cell.model_number),
             [&](OutputFormat f) { return emit_estimation_table(cell, f); });
    }

    nlohmann::json meta;
    meta["version"] = bundle.meta.version;
    meta["config_hash"] = bundle.meta.config_hash;
    meta["input_hash"] = bundle.meta.input_hash;
    meta["seed"] = bundle.meta.seed;
    meta["warnings"] = bundle.warnings;
    fs::path meta_path = fs::path(dir) / "run_meta.json";
    std::ofstream meta_out(meta_path, std::ios::binary);
    meta_out << meta.dump(2) << '\n';
    written.push_back(meta_path.string());

    fs::path report_path = fs::path(dir) / "report.txt";
    std::ofstream report_out(report_path, std::ios::binary);
    report_out << bundle_to_text(bundle);
    written.push_back(report_path.string());
    return written;
}

}  // namespace report
}  // namespace panelkit
