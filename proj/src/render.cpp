#include "panelkit/render.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "panelkit/csv.hpp"

namespace panelkit {
namespace report {

namespace {

using nlohmann::json;

constexpr const char* kStarNote =
    "Note: ***, **, * indicates significance at 1%, 5% and 10%.";

std::string display_term(const std::string& w_name) {
    // Short-run difference columns render under the plain variable name, the
    // way the published tables label them.
    if (w_name.rfind("d.", 0) == 0) return w_name.substr(2);
    return w_name;
}

std::string fixed3(double v) {
    if (std::isnan(v)) return "";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

json test_to_json(const diag::TestResult& t) {
    json j;
    j["test"] = t.test_name;
    j["statistic"] = t.statistic;
    if (t.p_value) j["p_value"] = *t.p_value;
    j["null_hypothesis"] = t.null_hypothesis;
    j["stars"] = t.stars();
    json dec = json::object();
    for (const auto& [level, rej] : t.reject) dec[format_sig(level)] = rej;
    j["reject"] = dec;
    if (!t.warnings.empty()) j["warnings"] = t.warnings;
    return j;
}

std::string stat_with_stars(const diag::TestResult& t) {
    return format_sig(t.statistic) + t.stars();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw UsageError("unknown output format '" + name + "' (expected text|csv|json)");
}

std::string format_extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "txt";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
    }
    return "txt";
}

std::string format_sig(double v) {
    if (std::isnan(v)) return "";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string emit_estimation_table(const EstimationCell& cell, OutputFormat format) {
    const std::string title = "Model " + std::to_string(cell.model_number) + " (" +
                              cell.variant + ", " + cell.spec.dependent + ")" +
                              (cell.control.empty() ? "" : ", control " + cell.control);
    if (format == OutputFormat::Json) {
        json j;
        j["variant"] = cell.variant;
        j["model"] = cell.model_number;
        j["dependent"] = cell.spec.dependent;
        j["control"] = cell.control;
        if (!cell.result) {
            j["failure"] = cell.failure;
            return j.dump(2) + "\n";
        }
        const auto& r = *cell.result;
        json lr = json::array();
        for (std::size_t k = 0; k < r.long_run_names.size(); ++k) {
            lr.push_back({{"term", r.long_run_names[k]},
                          {"estimate", r.theta[static_cast<long>(k)]},
                          {"std_error", r.theta_se[static_cast<long>(k)]},
                          {"stars", significance_stars(r.theta[static_cast<long>(k)],
                                                       r.theta_se[static_cast<long>(k)])}});
        }
        j["long_run"] = lr;
        json sr = json::array();
        sr.push_back({{"term", "rho_i"},
                      {"estimate", r.rho_mean},
                      {"std_error", r.rho_mean_se},
                      {"stars", significance_stars(r.rho_mean, r.rho_mean_se)}});
        for (std::size_t k = 1; k < r.short_run_names.size(); ++k) {
            const long c = static_cast<long>(k) - 1;
            sr.push_back({{"term", display_term(r.short_run_names[k])},
                          {"estimate", r.short_run_mean[c]},
                          {"std_error", r.short_run_mean_se[c]},
                          {"stars", significance_stars(r.short_run_mean[c],
                                                       r.short_run_mean_se[c])}});
        }
        j["short_run"] = sr;
        j["log_likelihood"] = r.log_likelihood;
        j["iterations"] = r.iterations;
        j["converged"] = r.converged;
        json groups = json::array();
        for (const auto& g : r.groups) {
            groups.push_back({{"entity", g.entity},
                              {"rho", g.rho},
                              {"rho_se", g.rho_se},
                              {"sigma2", g.sigma2},
                              {"rows", g.n_rows}});
        }
        j["groups"] = groups;
        return j.dump(2) + "\n";
    }

    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "section,term,estimate,std_error,stars\n";
        if (!cell.result) {
            os << "failure," << cell.failure << ",,,\n";
            return os.str();
        }
        const auto& r = *cell.result;
        for (std::size_t k = 0; k < r.long_run_names.size(); ++k) {
            const long c = static_cast<long>(k);
            os << "long_run," << r.long_run_names[k] << ',' << format_double(r.theta[c]) << ','
               << format_double(r.theta_se[c]) << ','
               << significance_stars(r.theta[c], r.theta_se[c]) << '\n';
        }
        os << "short_run,rho_i," << format_double(r.rho_mean) << ','
           << format_double(r.rho_mean_se) << ','
           << significance_stars(r.rho_mean, r.rho_mean_se) << '\n';
        for (std::size_t k = 1; k < r.short_run_names.size(); ++k) {
            const long c = static_cast<long>(k) - 1;
            os << "short_run," << display_term(r.short_run_names[k]) << ','
               << format_double(r.short_run_mean[c]) << ','
               << format_double(r.short_run_mean_se[c]) << ','
               << significance_stars(r.short_run_mean[c], r.short_run_mean_se[c]) << '\n';
        }
        os << "stats,log_likelihood," << format_double(r.log_likelihood) << ",,\n";
        return os.str();
    }

    std::ostringstream os;
    os << title << "\n";
    if (!cell.result) {
        os << "  estimation failed: " << cell.failure << "\n";
        return os.str();
    }
    const auto& r = *cell.result;
    char buf[160];
    os << "                    coef        s.e.\n";
    os << "Long-run\n";
    for (std::size_t k = 0; k < r.long_run_names.size(); ++k) {
        const long c = static_cast<long>(k);
        std::string est = format_sig(r.theta[c]) + significance_stars(r.theta[c], r.theta_se[c]);
        std::snprintf(buf, sizeof(buf), "  %-12s %12s %11s\n", r.long_run_names[k].c_str(),
                      est.c_str(), format_sig(r.theta_se[c]).c_str());
        os << buf;
    }
    os << "Short-run\n";
    {
        std::string est =
            format_sig(r.rho_mean) + significance_stars(r.rho_mean, r.rho_mean_se);
        std::snprintf(buf, sizeof(buf), "  %-12s %12s %11s\n", "rho_i", est.c_str(),
                      format_sig(r.rho_mean_se).c_str());
        os << buf;
    }
    for (std::size_t k = 1; k < r.short_run_names.size(); ++k) {
        const long c = static_cast<long>(k) - 1;
        std::string est = format_sig(r.short_run_mean[c]) +
                          significance_stars(r.short_run_mean[c], r.short_run_mean_se[c]);
        std::snprintf(buf, sizeof(buf), "  %-12s %12s %11s\n",
                      display_term(r.short_run_names[k]).c_str(), est.c_str(),
                      format_sig(r.short_run_mean_se[c]).c_str());
        os << buf;
    }
    os << "Log Likelihood " << format_sig(r.log_likelihood) << "\n";
    os << kStarNote << "\n";
    return os.str();
}

std::string emit_summary_table(const SummaryStats& stats, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (const auto& row : stats.rows) {
            json r;
            r["variable"] = row.name;
            r["n"] = row.n_obs;
            if (!std::isnan(row.mean)) r["mean"] = row.mean;
            if (!std::isnan(row.sd)) r["sd"] = row.sd;
            if (!std::isnan(row.min)) r["min"] = row.min;
            if (!std::isnan(row.max)) r["max"] = row.max;
            j.push_back(r);
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "variable,n,mean,sd,min,max\n";
        for (const auto& row : stats.rows) {
            os << row.name << ',' << row.n_obs << ',' << format_double(row.mean) << ','
               << format_double(row.sd) << ',' << format_double(row.min) << ','
               << format_double(row.max) << '\n';
        }
        return os.str();
    }
    std::ostringstream os;
    os << "Summary statistics\n";
    char buf[64];
    auto cell = [&](const std::string& s) {
        std::snprintf(buf, sizeof(buf), " %9s", s.c_str());
        return std::string(buf);
    };
    os << "     ";
    for (const auto& row : stats.rows) os << cell(row.name);
    os << "\nMean ";
    for (const auto& row : stats.rows) os << cell(format_sig(row.mean));
    os << "\nSD   ";
    for (const auto& row : stats.rows) os << cell(format_sig(row.sd));
    os << "\nMin  ";
    for (const auto& row : stats.rows) os << cell(format_sig(row.min));
    os << "\nMax  ";
    for (const auto& row : stats.rows) os << cell(format_sig(row.max));
    os << "\nN    ";
    for (const auto& row : stats.rows) os << cell(std::to_string(row.n_obs));
    os << "\n";
    return os.str();
}

std::string emit_correlation_table(const CorrelationMatrix& corr, OutputFormat format) {
    const std::size_t k = corr.names.size();
    if (format == OutputFormat::Json) {
        json j;
        j["variables"] = corr.names;
        json m = json::array();
        for (std::size_t a = 0; a < k; ++a) {
            json row = json::array();
            for (std::size_t b = 0; b < k; ++b) {
                double v = corr.r(static_cast<long>(a), static_cast<long>(b));
                if (std::isnan(v)) {
                    row.push_back(nullptr);
                } else {
                    row.push_back(v);
                }
            }
            m.push_back(row);
        }
        j["correlations"] = m;
        if (!corr.footnotes.empty()) j["footnotes"] = corr.footnotes;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "variable";
        for (const auto& n : corr.names) os << ',' << n;
        os << '\n';
        for (std::size_t a = 0; a < k; ++a) {
            os << corr.names[a];
            for (std::size_t b = 0; b < k; ++b) {
                os << ',';
                double v = corr.r(static_cast<long>(a), static_cast<long>(b));
                if (b <= a && !std::isnan(v)) os << format_double(v);
            }
            os << '\n';
        }
        return os.str();
    }
    std::ostringstream os;
    os << "Correlation matrix\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-8s", "");
    os << buf;
    for (const auto& n : corr.names) {
        std::snprintf(buf, sizeof(buf), " %7s", n.c_str());
        os << buf;
    }
    os << '\n';
    for (std::size_t a = 0; a < k; ++a) {
        std::snprintf(buf, sizeof(buf), "%-8s", corr.names[a].c_str());
        os << buf;
        for (std::size_t b = 0; b <= a; ++b) {
            double v = corr.r(static_cast<long>(a), static_cast<long>(b));
            std::snprintf(buf, sizeof(buf), " %7s", std::isnan(v) ? "." : fixed3(v).c_str());
            os << buf;
        }
        os << '\n';
    }
    for (const auto& f : corr.footnotes) os << "note: " << f << '\n';
    return os.str();
}

std::string emit_cd_table(const std::vector<CdTestRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (const auto& row : rows) {
            json r;
            r["variable"] = row.variable;
            json tests = json::array();
            for (const auto& t : row.tests) tests.push_back(test_to_json(t));
            r["tests"] = tests;
            j.push_back(r);
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "variable,test,statistic,p_value,stars\n";
        for (const auto& row : rows) {
            for (const auto& t : row.tests) {
                os << row.variable << ',' << t.test_name << ',' << format_double(t.statistic)
                   << ',' << (t.p_value ? format_double(*t.p_value) : "") << ',' << t.stars()
                   << '\n';
            }
        }
        return os.str();
    }
    std::ostringstream os;
    os << "Cross-sectional dependence tests\n";
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%-10s %14s %14s %14s\n", "variable", "Frees", "Friedman",
                  "Pesaran");
    os << buf;
    for (const auto& row : rows) {
        std::string cells[3] = {"", "", ""};
        for (const auto& t : row.tests) {
            if (t.test_name == "frees_cd") cells[0] = stat_with_stars(t);
            if (t.test_name == "friedman_cd") cells[1] = stat_with_stars(t);
            if (t.test_name == "pesaran_cd") cells[2] = stat_with_stars(t);
        }
        std::snprintf(buf, sizeof(buf), "%-10s %14s %14s %14s\n", row.variable.c_str(),
                      cells[0].c_str(), cells[1].c_str(), cells[2].c_str());
        os << buf;
    }
    os << "Note: ***, **, * means rejection of the null hypothesis of cross-sectional\n"
          "independence at 99%, 95% and 90% confidence level.\n";
    return os.str();
}

std::string emit_unit_root_table(const std::vector<UnitRootRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (const auto& row : rows) {
            json r;
            r["variable"] = row.variable;
            r["no_cross_sectional_variation"] = row.degenerate;
            json tests = json::array();
            for (const auto& t : row.tests) tests.push_back(test_to_json(t));
            r["tests"] = tests;
            j.push_back(r);
        }
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "variable,test,statistic,p_value,stars,degenerate\n";
        for (const auto& row : rows) {
            for (const auto& t : row.tests) {
                os << row.variable << ',' << t.test_name << ',' << format_double(t.statistic)
                   << ',' << (t.p_value ? format_double(*t.p_value) : "") << ',' << t.stars()
                   << ',' << (row.degenerate ? "yes" : "") << '\n';
            }
        }
        return os.str();
    }
    std::ostringstream os;
    os << "Panel unit root tests\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-10s %16s %16s %16s %16s\n", "variable", "LLC t*",
                  "IPS W-stat", "ADF-Fisher", "PP-Fisher");
    os << buf;
    bool any_degenerate = false;
    for (const auto& row : rows) {
        std::string cells[4] = {"", "", "", ""};
        for (const auto& t : row.tests) {
            if (t.test_name == "llc") cells[0] = stat_with_stars(t);
            if (t.test_name == "ips") cells[1] = stat_with_stars(t);
            if (t.test_name == "fisher_adf") cells[2] = stat_with_stars(t);
            if (t.test_name == "fisher_pp") cells[3] = stat_with_stars(t);
        }
        std::string label = row.variable + (row.degenerate ? " (!)" : "");
        any_degenerate = any_degenerate || row.degenerate;
        std::snprintf(buf, sizeof(buf), "%-10s %16s %16s %16s %16s\n", label.c_str(),
                      cells[0].c_str(), cells[1].c_str(), cells[2].c_str(), cells[3].c_str());
        os << buf;
    }
    os << "Notes: (i) the null hypothesis for all the tests is the presence of unit roots\n"
          "(LLC assumes a common unit-root process, the others individual processes);\n"
          "(ii) *, **, *** mean stationarity (in level) significant at 10%, 5% and 1%.\n";
    if (any_degenerate) {
        os << "(!) variable has no cross-sectional variation: the panel tests treat N\n"
              "identical series as independent, so these entries overstate the evidence.\n";
    }
    return os.str();
}

std::string emit_mc_report(const sim::MonteCarloReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        j["procedure"] = report.procedure;
        j["reps"] = report.reps;
        j["failures"] = report.failures;
        j["master_seed"] = report.master_seed;
        if (!report.parameter_names.empty()) {
            json params = json::array();
            for (std::size_t k = 0; k < report.parameter_names.size(); ++k) {
                params.push_back({{"name", report.parameter_names[k]},
                                  {"truth", report.true_values[k]},
                                  {"mean", report.mean_estimates[k]},
                                  {"bias", report.bias[k]},
                                  {"rmse", report.rmse[k]},
                                  {"coverage95", report.coverage[k]}});
            }
            j["parameters"] = params;
        }
        json rates = json::object();
        for (const auto& [name, rate] : report.rejection_rates) rates[name] = rate;
        j["rejection_rates_5pct"] = rates;
        if (!report.notes.empty()) j["notes"] = report.notes;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "kind,name,value\n";
        for (std::size_t k = 0; k < report.parameter_names.size(); ++k) {
            os << "bias," << report.parameter_names[k] << ',' << format_double(report.bias[k])
               << '\n';
            os << "rmse," << report.parameter_names[k] << ',' << format_double(report.rmse[k])
               << '\n';
            os << "coverage95," << report.parameter_names[k] << ','
               << format_double(report.coverage[k]) << '\n';
        }
        for (const auto& [name, rate] : report.rejection_rates) {
            os << "rejection_rate," << name << ',' << format_double(rate) << '\n';
        }
        return os.str();
    }
    return report.to_text();
}

std::string emit_validation_report(const ValidationReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j;
        j["min_required_rows"] = report.min_required_rows;
        json ents = json::array();
        for (const auto& e : report.entities) {
            ents.push_back({{"entity", e.entity},
                            {"usable_rows", e.usable_rows},
                            {"usable", e.usable}});
        }
        j["entities"] = ents;
        j["warnings"] = report.warnings;
        return j.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "entity,usable_rows,usable\n";
        for (const auto& e : report.entities) {
            os << e.entity << ',' << e.usable_rows << ',' << (e.usable ? "yes" : "no") << '\n';
        }
        return os.str();
    }
    return report.to_text();
}

}  // namespace report
}  // namespace panelkit
