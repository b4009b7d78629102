#include "panelkit/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "panelkit/cross_section.hpp"
#include "panelkit/pmg.hpp"
#include "panelkit/rng.hpp"
#include "panelkit/unit_root.hpp"

namespace panelkit {
namespace sim {

namespace {

// One replication's outcome; slots are NaN when not applicable.
struct RepOutcome {
    bool failed = false;
    std::string error;
    std::vector<double> estimates;
    std::vector<char> covered;
    std::map<std::string, bool> rejected;
    double mean_rho = kNaN;
};

pmg::ModelSpec generic_spec(const DGPParams& params) {
    pmg::ModelSpec spec;
    spec.dependent = "z";
    for (std::size_t j = 1; j <= params.theta_true.size(); ++j) {
        spec.long_run.push_back("x" + std::to_string(j));
    }
    return spec;
}

RepOutcome run_pmg_recovery(const DGPParams& params, std::uint64_t rep_seed) {
    DGPParams p = params;
    p.seed = rep_seed;
    RepOutcome out;
    PanelDataset panel = simulate_ecm_panel(p);
    pmg::ECMDesign design = pmg::build_ecm_design(panel, generic_spec(p));
    pmg::PMGResult fit = pmg::estimate_pmg(design);
    for (long j = 0; j < fit.theta.size(); ++j) {
        out.estimates.push_back(fit.theta[j]);
        const double half = 1.959963984540054 * fit.theta_se[j];
        out.covered.push_back(std::isfinite(half) &&
                              std::abs(fit.theta[j] - p.theta_true[static_cast<std::size_t>(j)]) <=
                                  half);
    }
    out.mean_rho = fit.rho_mean;
    return out;
}

PanelMatrix iid_panel(const DGPParams& params, std::uint64_t rep_seed) {
    auto rng = make_rng(rep_seed, 7);
    std::normal_distribution<double> n01(0.0, 1.0);
    PanelMatrix pm(static_cast<std::size_t>(params.n_groups),
                   static_cast<std::size_t>(params.n_periods));
    for (std::size_t i = 0; i < pm.n_entities; ++i) {
        for (std::size_t t = 0; t < pm.n_periods; ++t) pm.set(i, t, n01(rng));
    }
    return pm;
}

PanelMatrix ar_panel(const DGPParams& params, std::uint64_t rep_seed, double phi) {
    auto rng = make_rng(rep_seed, 9);
    std::normal_distribution<double> n01(0.0, 1.0);
    PanelMatrix pm(static_cast<std::size_t>(params.n_groups),
                   static_cast<std::size_t>(params.n_periods));
    const int burn = 50;
    for (std::size_t i = 0; i < pm.n_entities; ++i) {
        double state = 0.0;
        for (int t = 0; t < burn + params.n_periods; ++t) {
            state = phi * state + n01(rng);
            if (t >= burn) pm.set(i, static_cast<std::size_t>(t - burn), state);
        }
    }
    return pm;
}

PanelMatrix random_walk_panel(const DGPParams& params, std::uint64_t rep_seed) {
    auto rng = make_rng(rep_seed, 8);
    std::normal_distribution<double> n01(0.0, 1.0);
    PanelMatrix pm(static_cast<std::size_t>(params.n_groups),
                   static_cast<std::size_t>(params.n_periods));
    for (std::size_t i = 0; i < pm.n_entities; ++i) {
        double state = 0.0;
        for (std::size_t t = 0; t < pm.n_periods; ++t) {
            state += n01(rng);
            pm.set(i, t, state);
        }
    }
    return pm;
}

RepOutcome run_cd_size(const DGPParams& params, std::uint64_t rep_seed) {
    RepOutcome out;
    PanelMatrix pm = iid_panel(params, rep_seed);
    out.rejected["pesaran_cd"] = diag::pesaran_cd(pm).rejected_at(0.05);
    out.rejected["friedman_cd"] = diag::friedman_cd(pm).rejected_at(0.05);
    out.rejected["frees_cd"] = diag::frees_cd(pm).rejected_at(0.05);
    return out;
}

RepOutcome run_unit_root(const DGPParams& params, std::uint64_t rep_seed, bool stationary) {
    RepOutcome out;
    PanelMatrix pm = stationary ? ar_panel(params, rep_seed, params.x_ar)
                                : random_walk_panel(params, rep_seed);
    diag::UnitRootSpec spec;
    out.rejected["llc"] = diag::llc_test(pm, spec).rejected_at(0.05);
    out.rejected["ips"] = diag::ips_test(pm, spec).rejected_at(0.05);
    out.rejected["fisher_adf"] = diag::fisher_combine(pm, spec, diag::FisherMode::Adf)
                                     .rejected_at(0.05);
    out.rejected["fisher_pp"] = diag::fisher_combine(pm, spec, diag::FisherMode::Pp)
                                    .rejected_at(0.05);
    return out;
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("PANELKIT_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

}  // namespace

std::vector<std::string> monte_carlo_procedures() {
    return {"pmg_recovery", "cd_size", "unit_root_size", "unit_root_power"};
}

MonteCarloReport monte_carlo(const std::string& procedure, const DGPParams& params, int reps,
                             int workers) {
    if (reps < 1) throw UsageError("monte_carlo: reps must be >= 1");
    auto known = monte_carlo_procedures();
    if (std::find(known.begin(), known.end(), procedure) == known.end()) {
        std::string msg = "unknown Monte Carlo procedure '" + procedure + "'; known:";
        for (const auto& k : known) msg += " " + k;
        throw UsageError(msg);
    }
    params.validate();

    const int n_workers = std::min(resolve_workers(workers), reps);
    std::vector<RepOutcome> outcomes(static_cast<std::size_t>(reps));

    auto run_one = [&](int rep) {
        const std::uint64_t rep_seed = derive_seed(params.seed, static_cast<std::uint64_t>(rep));
        RepOutcome& slot = outcomes[static_cast<std::size_t>(rep)];
        try {
            if (procedure == "pmg_recovery") {
                slot = run_pmg_recovery(params, rep_seed);
            } else if (procedure == "cd_size") {
                slot = run_cd_size(params, rep_seed);
            } else if (procedure == "unit_root_size") {
                slot = run_unit_root(params, rep_seed, false);
            } else {
                slot = run_unit_root(params, rep_seed, true);
            }
        } catch (const std::exception& e) {
            slot.failed = true;
            slot.error = e.what();
        }
    };

    if (n_workers <= 1) {
        for (int r = 0; r < reps; ++r) run_one(r);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) {
            pool.emplace_back([&, w] {
                for (int r = w; r < reps; r += n_workers) run_one(r);
            });
        }
        for (auto& th : pool) th.join();
    }

    MonteCarloReport report;
    report.procedure = procedure;
    report.reps = reps;
    report.master_seed = params.seed;
    report.workers = n_workers;

    // Ordered reduction over the preallocated slots keeps the report
    // independent of the worker count.
    int ok = 0;
    for (const auto& o : outcomes) {
        if (o.failed) ++report.failures;
    }
    ok = reps - report.failures;
    if (ok == 0) {
        report.notes.push_back("every replication failed; first error: " +
                               (reps > 0 ? outcomes[0].error : std::string("none")));
        return report;
    }

    if (procedure == "pmg_recovery") {
        const std::size_t k = params.theta_true.size();
        report.true_values = params.theta_true;
        for (std::size_t j = 0; j < k; ++j) {
            report.parameter_names.push_back("theta_" + std::to_string(j + 1));
        }
        report.mean_estimates.assign(k, 0.0);
        report.rmse.assign(k, 0.0);
        report.coverage.assign(k, 0.0);
        int neg_rho_reps = 0;
        for (const auto& o : outcomes) {
            if (o.failed) continue;
            for (std::size_t j = 0; j < k; ++j) {
                report.mean_estimates[j] += o.estimates[j];
                double err = o.estimates[j] - params.theta_true[j];
                report.rmse[j] += err * err;
                report.coverage[j] += o.covered[j] ? 1.0 : 0.0;
            }
            if (o.mean_rho < 0.0) ++neg_rho_reps;
        }
        report.bias.assign(k, 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            report.mean_estimates[j] /= ok;
            report.bias[j] = report.mean_estimates[j] - params.theta_true[j];
            report.rmse[j] = std::sqrt(report.rmse[j] / ok);
            report.coverage[j] /= ok;
        }
        report.rejection_rates.emplace_back("mean_rho_negative",
                                            static_cast<double>(neg_rho_reps) / ok);
    } else {
        std::map<std::string, int> counts;
        for (const auto& o : outcomes) {
            if (o.failed) continue;
            for (const auto& [name, rej] : o.rejected) counts[name] += rej ? 1 : 0;
        }
        for (const auto& [name, c] : counts) {
            report.rejection_rates.emplace_back(name, static_cast<double>(c) / ok);
        }
    }
    return report;
}

std::string MonteCarloReport::to_text() const {
    std::ostringstream os;
    os << "Monte Carlo: " << procedure << "  (reps=" << reps << ", failures=" << failures
       << ", seed=" << master_seed << ")\n";
    if (!parameter_names.empty()) {
        os << "  parameter      truth      mean       bias       rmse    coverage95\n";
        for (std::size_t j = 0; j < parameter_names.size(); ++j) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "  %-12s %9.4f %9.4f %10.2e %10.2e %9.3f\n",
                          parameter_names[j].c_str(), true_values[j], mean_estimates[j],
                          bias[j], rmse[j], coverage[j]);
            os << buf;
        }
    }
    for (const auto& [name, rate] : rejection_rates) {
        char buf[120];
        std::snprintf(buf, sizeof(buf), "  %-24s rate at 5%%: %.4f\n", name.c_str(), rate);
        os << buf;
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace sim
}  // namespace panelkit
