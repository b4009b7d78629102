// panelkit command-line front end: ingest / derive / diagnose / estimate /
// replicate / simulate / montecarlo over long-format panel CSVs or synthetic
// data. Exit codes: 0 success, 1 usage error, 2 data error, 3 estimation
// failure.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "panelkit/cross_section.hpp"
#include "panelkit/csv.hpp"
#include "panelkit/monte_carlo.hpp"
#include "panelkit/replicate.hpp"
#include "panelkit/validate.hpp"

namespace {

using namespace panelkit;
using report::OutputFormat;
using report::RunConfig;

struct CommonArgs {
    std::string config_path;
    std::string input_path;
    std::string out_dir;
    std::string format;
    std::string zscore;
    std::string shocks;
    std::string drop_entity;
    long seed = -1;
    std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "run configuration file (key=value lines)");
    cmd->add_option("--input", args.input_path, "input CSV path");
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--format", args.format, "output formats: text|csv|json (comma list)");
    cmd->add_option("--seed", args.seed, "master seed");
    cmd->add_option("--zscore", args.zscore, "z-score variant: boyd|yeyati");
    cmd->add_option("--shocks", args.shocks,
                    "shock variants: returns|positive|negative|all (comma list)");
    cmd->add_option("--drop-entity", args.drop_entity, "drop one entity before estimation");
    cmd->add_option("--set", args.sets, "extra config assignments key=value")
        ->take_all();
}

RunConfig build_config(const CommonArgs& args) {
    RunConfig config = args.config_path.empty() ? RunConfig()
                                                : RunConfig::from_file(args.config_path);
    if (!args.input_path.empty()) config.apply_kv("input", args.input_path);
    if (!args.out_dir.empty()) config.apply_kv("out", args.out_dir);
    if (!args.format.empty()) config.apply_kv("format", args.format);
    if (args.seed >= 0) config.apply_kv("seed", std::to_string(args.seed));
    if (!args.zscore.empty()) config.apply_kv("zscore", args.zscore);
    if (!args.shocks.empty()) config.apply_kv("shocks", args.shocks);
    if (!args.drop_entity.empty()) config.apply_kv("drop_entity", args.drop_entity);
    for (const auto& kv : args.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--set expects key=value, got '" + kv + "'");
        }
        config.apply_kv(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return config;
}

PanelDataset load_input(const RunConfig& config) {
    if (config.input_path) {
        CsvSchema schema;
        schema.entity_col = config.entity_col;
        schema.period_col = config.period_col;
        return load_panel_file(*config.input_path, schema);
    }
    sim::DGPParams dgp = config.dgp;
    dgp.seed = config.seed;
    if (config.simulate_mode && *config.simulate_mode == "replication") {
        sim::ReplicationDGPParams rp;
        rp.n_groups = dgp.n_groups;
        rp.n_periods = dgp.n_periods;
        rp.seed = config.seed;
        rp.shock_lookback = config.shock_lookback;
        return sim::simulate_replication_panel(rp);
    }
    return sim::simulate_ecm_panel(dgp);
}

void write_or_print(const std::string& out_dir, const std::string& stem,
                    const std::vector<OutputFormat>& formats,
                    const std::function<std::string(OutputFormat)>& render) {
    if (out_dir.empty()) {
        std::cout << render(formats.front());
        return;
    }
    std::filesystem::create_directories(out_dir);
    for (OutputFormat f : formats) {
        auto path = std::filesystem::path(out_dir) /
                    (stem + "." + report::format_extension(f));
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("cannot write " + path.string());
        out << render(f);
        std::cout << "wrote " << path.string() << "\n";
    }
}

int run_ingest(const CommonArgs& args) {
    RunConfig config = build_config(args);
    if (!config.input_path) throw UsageError("ingest requires --input");
    PanelDataset panel = load_input(config);
    std::cout << "loaded panel: " << panel.n_entities() << " entities x "
              << panel.n_periods() << " periods, " << panel.variable_names().size()
              << " variables\n";
    for (const auto& v : panel.variable_names()) {
        std::size_t missing = 0;
        for (std::size_t i = 0; i < panel.n_entities(); ++i) {
            for (std::size_t t = 0; t < panel.n_periods(); ++t) {
                missing += panel.is_present(v, i, t) ? 0 : 1;
            }
        }
        std::cout << "  " << v << ": " << missing << " missing cells\n";
    }
    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        auto path = std::filesystem::path(args.out_dir) / "panel.csv";
        std::ofstream out(path, std::ios::binary);
        CsvSchema schema;
        schema.entity_col = config.entity_col;
        schema.period_col = config.period_col;
        write_panel_csv(panel, out, schema);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int run_derive(const CommonArgs& args) {
    RunConfig config = build_config(args);
    PanelDataset panel = load_input(config);
    report::apply_derivations(panel, config);
    CsvSchema schema;
    schema.entity_col = config.entity_col;
    schema.period_col = config.period_col;
    if (args.out_dir.empty()) {
        write_panel_csv(panel, std::cout, schema);
    } else {
        std::filesystem::create_directories(args.out_dir);
        auto path = std::filesystem::path(args.out_dir) / "derived.csv";
        std::ofstream out(path, std::ios::binary);
        write_panel_csv(panel, out, schema);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int run_diagnose(const CommonArgs& args) {
    RunConfig config = build_config(args);
    PanelDataset panel = load_input(config);
    report::apply_derivations(panel, config);
    if (config.drop_entity) panel = panel.without_entity(*config.drop_entity);

    std::vector<report::CdTestRow> cd_rows;
    for (const std::string name : {std::string("z1"), std::string("z2")}) {
        if (!panel.has_variable(name)) continue;
        PanelMatrix pm = PanelMatrix::from(panel, name);
        report::CdTestRow row;
        row.variable = name;
        for (auto* fn : {&diag::frees_cd, &diag::friedman_cd, &diag::pesaran_cd}) {
            try {
                row.tests.push_back((*fn)(pm));
            } catch (const std::exception& e) {
                std::cerr << "warning: cd test on " << name << " failed: " << e.what() << "\n";
            }
        }
        cd_rows.push_back(std::move(row));
    }

    std::vector<report::UnitRootRow> ur_rows;
    for (const auto& v : report::table_variable_order(panel)) {
        PanelMatrix pm = PanelMatrix::from(panel, v);
        report::UnitRootRow row;
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
            std::cerr << "warning: unit-root tests on " << v << " skipped: " << e.what()
                      << "\n";
            continue;
        }
        ur_rows.push_back(std::move(row));
    }

    write_or_print(args.out_dir, "cd_tests", config.formats, [&](OutputFormat f) {
        return report::emit_cd_table(cd_rows, f);
    });
    write_or_print(args.out_dir, "unit_roots", config.formats, [&](OutputFormat f) {
        return report::emit_unit_root_table(ur_rows, f);
    });
    return 0;
}

int run_estimate(const CommonArgs& args, const std::string& variant, int model) {
    RunConfig config = build_config(args);
    PanelDataset panel = load_input(config);
    report::apply_derivations(panel, config);
    if (config.drop_entity) panel = panel.without_entity(*config.drop_entity);

    report::EstimationCell cell;
    cell.variant = variant;
    cell.model_number = model;
    cell.control = model >= 2 ? config.controls.at(static_cast<std::size_t>(model - 2))
                              : std::string();
    cell.spec = report::grid_spec(config, variant, model);

    ValidationReport validation = validate_panel(panel, cell.spec);
    for (const auto& w : validation.warnings) std::cerr << "warning: " << w << "\n";

    pmg::ECMDesign design = pmg::build_ecm_design(panel, cell.spec);
    cell.result = pmg::estimate_pmg(design, config.pmg_options);

    write_or_print(args.out_dir,
                   "estimation_" + variant + "_model" + std::to_string(model), config.formats,
                   [&](OutputFormat f) { return report::emit_estimation_table(cell, f); });
    return 0;
}

int run_replicate_cmd(const CommonArgs& args) {
    RunConfig config = build_config(args);
    report::ReportBundle bundle = report::run_replication(config);
    int failures = 0;
    for (const auto& cell : bundle.cells) failures += cell.result ? 0 : 1;
    if (args.out_dir.empty() && config.out_dir.empty()) {
        std::cout << report::bundle_to_text(bundle);
    } else {
        const std::string dir = args.out_dir.empty() ? config.out_dir : args.out_dir;
        auto written = report::write_bundle(bundle, dir, config.formats);
        std::cout << "wrote " << written.size() << " files to " << dir << "\n";
    }
    if (failures > 0) {
        std::cerr << failures << " estimation cell(s) failed (reported in place)\n";
    }
    return 0;
}

int run_simulate(const CommonArgs& args, const std::string& mode) {
    RunConfig config = build_config(args);
    config.simulate_mode = mode;
    config.input_path.reset();
    PanelDataset panel = load_input(config);
    CsvSchema schema;
    schema.entity_col = config.entity_col;
    schema.period_col = config.period_col;
    if (args.out_dir.empty()) {
        write_panel_csv(panel, std::cout, schema);
    } else {
        std::filesystem::create_directories(args.out_dir);
        auto path = std::filesystem::path(args.out_dir) / ("simulated_" + mode + ".csv");
        std::ofstream out(path, std::ios::binary);
        write_panel_csv(panel, out, schema);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int run_montecarlo(const CommonArgs& args) {
    RunConfig config = build_config(args);
    sim::DGPParams dgp = config.dgp;
    dgp.seed = config.seed;
    sim::MonteCarloReport mc = sim::monte_carlo(config.mc_procedure, dgp, config.mc_reps);
    write_or_print(args.out_dir, "montecarlo_" + config.mc_procedure, config.formats,
                   [&](OutputFormat f) { return report::emit_mc_report(mc, f); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"panelkit: dynamic-panel ARDL/PMG toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string variant = "returns";
    int model = 1;
    std::string sim_mode = "ecm";

    auto* ingest = app.add_subcommand("ingest", "load and validate a panel CSV");
    add_common(ingest, args);
    auto* derive = app.add_subcommand("derive", "compute z-scores, returns and oil shocks");
    add_common(derive, args);
    auto* diagnose = app.add_subcommand("diagnose",
                                        "cross-sectional dependence and unit-root battery");
    add_common(diagnose, args);
    auto* estimate = app.add_subcommand("estimate", "estimate a single PMG model");
    add_common(estimate, args);
    estimate->add_option("--variant", variant, "shock variant: returns|positive|negative");
    estimate->add_option("--model", model, "model number 1..9");
    auto* replicate = app.add_subcommand("replicate", "run the full model grid");
    add_common(replicate, args);
    auto* simulate = app.add_subcommand("simulate", "emit a synthetic panel CSV");
    add_common(simulate, args);
    simulate->add_option("--mode", sim_mode, "ecm|replication");
    auto* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo evaluation harness");
    add_common(montecarlo, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ingest->parsed()) return run_ingest(args);
        if (derive->parsed()) return run_derive(args);
        if (diagnose->parsed()) return run_diagnose(args);
        if (estimate->parsed()) return run_estimate(args, variant, model);
        if (replicate->parsed()) return run_replicate_cmd(args);
        if (simulate->parsed()) return run_simulate(args, sim_mode);
        if (montecarlo->parsed()) return run_montecarlo(args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const EstimationError& e) {
        std::cerr << "estimation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
