// Regenerates include/panelkit/ur_tables.hpp: every simulated null table the
// unit-root battery consumes.
//
//   - kUrMoments:    E[t] and Var[t] of the ADF t statistic (the IPS
//                    standardization), by series length and lag.
//   - kAdfQuantiles: null quantiles of the same statistic, the finite-sample
//                    response surface behind ADF p-values.
//   - kPpQuantiles:  null quantiles of the Phillips-Perron Z_tau under the
//                    default Newey-West bandwidth rule.
//   - kLlcFactors:   mean/variance correction factors for the pooled LLC t,
//                    simulated from the full pipeline the library runs, per
//                    the construction in Levin, Lin and Chu (2002).
//
// All cells simulate a driftless random walk with standard normal
// innovations. Usage:
//
//   gen_ur_tables [reps] [llc_reps] [out_path]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <vector>

#include "panelkit/rng.hpp"
#include "panelkit/unit_root.hpp"
#include "panelkit/ur_tables.hpp"

namespace {

using namespace panelkit;
using diag::Deterministic;

constexpr int kLengths[] = {6, 7, 8, 9, 10, 12, 15, 20, 25, 30, 40, 50, 60, 80, 100, 150, 200};
constexpr int kMaxLag = 4;
constexpr int kLlcGroups = 12;
constexpr std::uint64_t kSeed = 987654321ULL;

bool adf_feasible(int n, int p, Deterministic det) {
    const int rows = n - p - 1;
    const int cols = 1 + p + 1 + (det == Deterministic::ConstantAndTrend ? 1 : 0);
    return rows >= cols + 1;
}

std::vector<double> random_walk(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> n01(0.0, 1.0);
    std::vector<double> y(static_cast<std::size_t>(n));
    double level = 0.0;
    for (int t = 0; t < n; ++t) {
        level += n01(rng);
        y[static_cast<std::size_t>(t)] = level;
    }
    return y;
}

struct MomentsAndQuantiles {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double var = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> quantiles;
};

MomentsAndQuantiles simulate_stat(int n, int p, Deterministic det, bool pp, int reps,
                                  std::uint64_t stream) {
    diag::UnitRootSpec spec;
    spec.deterministic = det;
    spec.fixed_lag = std::max(p, 0);
    spec.max_lags = std::max(p, 0);

    auto rng = make_rng(kSeed, stream);
    std::vector<double> stats(static_cast<std::size_t>(reps));
    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < reps; ++r) {
        std::vector<double> y = random_walk(rng, n);
        double t = pp ? diag::pp_test(y, spec).t_stat : diag::adf_test(y, spec).t_stat;
        stats[static_cast<std::size_t>(r)] = t;
        sum += t;
        sumsq += t * t;
    }
    std::sort(stats.begin(), stats.end());

    MomentsAndQuantiles out;
    out.mean = sum / reps;
    out.var = (sumsq - reps * out.mean * out.mean) / (reps - 1);
    out.quantiles.resize(diag::detail::kUrQuantileCount);
    for (int k = 0; k < diag::detail::kUrQuantileCount; ++k) {
        double pos = diag::detail::kUrQuantileProbs[k] * (reps - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(lo);
        std::size_t hi = std::min(lo + 1, static_cast<std::size_t>(reps - 1));
        out.quantiles[static_cast<std::size_t>(k)] =
            stats[lo] * (1.0 - frac) + stats[hi] * frac;
    }
    return out;
}

struct LlcFactors {
    double mu = std::numeric_limits<double>::quiet_NaN();
    double sigma = std::numeric_limits<double>::quiet_NaN();
};

LlcFactors simulate_llc(int n, int p, Deterministic det, int reps, std::uint64_t stream) {
    diag::UnitRootSpec spec;
    spec.deterministic = det;
    spec.fixed_lag = p;
    spec.max_lags = p;

    auto rng = make_rng(kSeed, stream);
    std::normal_distribution<double> n01(0.0, 1.0);
    std::vector<double> t_delta(static_cast<std::size_t>(reps));
    std::vector<double> mult(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        PanelMatrix pm(kLlcGroups, static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < kLlcGroups; ++i) {
            double level = 0.0;
            for (std::size_t t = 0; t < static_cast<std::size_t>(n); ++t) {
                level += n01(rng);
                pm.set(i, t, level);
            }
        }
        diag::LlcComponents c = diag::llc_components(pm, spec);
        t_delta[static_cast<std::size_t>(r)] = c.t_delta;
        mult[static_cast<std::size_t>(r)] = c.multiplier;
    }
    double mean_t = 0.0, mean_a = 0.0;
    for (int r = 0; r < reps; ++r) {
        mean_t += t_delta[static_cast<std::size_t>(r)];
        mean_a += mult[static_cast<std::size_t>(r)];
    }
    mean_t /= reps;
    mean_a /= reps;
    LlcFactors f;
    f.mu = mean_t / mean_a;
    double ss = 0.0;
    for (int r = 0; r < reps; ++r) {
        double z = t_delta[static_cast<std::size_t>(r)] - mult[static_cast<std::size_t>(r)] * f.mu;
        ss += z * z;
    }
    f.sigma = std::sqrt(ss / (reps - 1));
    return f;
}

std::string fmt(double v) {
    char buf[64];
    if (std::isnan(v)) {
        std::snprintf(buf, sizeof(buf), "kUrNaN");
    } else {
        std::snprintf(buf, sizeof(buf), "%.6f", v);
    }
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 100000;
    const int llc_reps = argc > 2 ? std::atoi(argv[2]) : 8000;
    const std::string out_path = argc > 3 ? argv[3] : "include/panelkit/ur_tables.hpp";

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 1;
    }

    out << "#pragma once\n\n";
    out << "// Simulated null tables for the unit-root battery: ADF t moments (IPS\n"
           "// standardization), finite-sample ADF and Phillips-Perron quantiles (the\n"
           "// response surfaces behind the p-values), and LLC mean/variance correction\n"
           "// factors simulated from this library's own pipeline following the\n"
           "// construction in Levin, Lin and Chu (2002).\n"
           "//\n"
           "// Generated by tools/gen_ur_tables.cpp: "
        << reps << " replications per quantile cell,\n// " << llc_reps
        << " panel replications (N=" << kLlcGroups
        << ") per LLC cell, driftless random walk null,\n// seed " << kSeed
        << ". NaN entries mark infeasible cells. Do not edit by hand.\n\n";
    out << "#include <limits>\n\n";
    out << "namespace panelkit {\nnamespace diag {\nnamespace detail {\n\n";
    out << "inline constexpr int kUrQuantileCount = 25;\n";
    out << "inline constexpr double kUrQuantileProbs[kUrQuantileCount] = {\n"
           "    0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.10, 0.15, 0.20, 0.30, "
           "0.40, 0.50,\n"
           "    0.60,   0.70,  0.80,   0.85,  0.90, 0.95,  0.975, 0.99, 0.995, 0.9975, "
           "0.999, 0.9995};\n\n";
    out << "inline constexpr double kUrNaN = std::numeric_limits<double>::quiet_NaN();\n\n";
    out << "struct UrMomentRow {\n    int t;\n    int p;\n    double mean_c;\n    double "
           "var_c;\n    double mean_ct;\n    double var_ct;\n};\n\n";
    out << "struct UrQuantileRow {\n    int t;\n    int p;  // -1 for Phillips-Perron\n    "
           "double q_c[kUrQuantileCount];\n    double q_ct[kUrQuantileCount];\n};\n\n";
    out << "struct LlcFactorRow {\n    int t;\n    int p;\n    double mu_c;\n    double "
           "sigma_c;\n    double mu_ct;\n    double sigma_ct;\n};\n\n";

    std::uint64_t stream = 1;
    struct CellResult {
        int t, p;
        MomentsAndQuantiles c, ct;
    };
    std::vector<CellResult> adf_cells;
    for (int n : kLengths) {
        for (int p = 0; p <= kMaxLag; ++p) {
            CellResult cell{n, p, {}, {}};
            if (adf_feasible(n, p, Deterministic::Constant)) {
                cell.c = simulate_stat(n, p, Deterministic::Constant, false, reps, stream);
            }
            ++stream;
            if (adf_feasible(n, p, Deterministic::ConstantAndTrend)) {
                cell.ct =
                    simulate_stat(n, p, Deterministic::ConstantAndTrend, false, reps, stream);
            }
            ++stream;
            adf_cells.push_back(std::move(cell));
            std::cout << "adf T=" << n << " p=" << p << "\n" << std::flush;
        }
    }

    out << "inline constexpr UrMomentRow kUrMoments[] = {\n";
    for (const auto& cell : adf_cells) {
        out << "    {" << cell.t << ", " << cell.p << ", " << fmt(cell.c.mean) << ", "
            << fmt(cell.c.var) << ", " << fmt(cell.ct.mean) << ", " << fmt(cell.ct.var)
            << "},\n";
    }
    out << "};\n\n";

    auto write_quantile_rows = [&](const char* name, const std::vector<CellResult>& cells) {
        out << "inline constexpr UrQuantileRow " << name << "[] = {\n";
        for (const auto& cell : cells) {
            out << "    {" << cell.t << ", " << cell.p << ",\n     {";
            for (int k = 0; k < diag::detail::kUrQuantileCount; ++k) {
                out << (k ? ", " : "")
                    << fmt(cell.c.quantiles.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                    : cell.c.quantiles[static_cast<std::size_t>(k)]);
            }
            out << "},\n     {";
            for (int k = 0; k < diag::detail::kUrQuantileCount; ++k) {
                out << (k ? ", " : "")
                    << fmt(cell.ct.quantiles.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : cell.ct.quantiles[static_cast<std::size_t>(k)]);
            }
            out << "}},\n";
        }
        out << "};\n\n";
    };
    write_quantile_rows("kAdfQuantiles", adf_cells);

    std::vector<CellResult> pp_cells;
    for (int n : kLengths) {
        CellResult cell{n, -1, {}, {}};
        if (adf_feasible(n, 0, Deterministic::Constant)) {
            cell.c = simulate_stat(n, -1, Deterministic::Constant, true, reps, stream);
        }
        ++stream;
        if (adf_feasible(n, 0, Deterministic::ConstantAndTrend)) {
            cell.ct = simulate_stat(n, -1, Deterministic::ConstantAndTrend, true, reps, stream);
        }
        ++stream;
        pp_cells.push_back(std::move(cell));
        std::cout << "pp T=" << n << "\n" << std::flush;
    }
    write_quantile_rows("kPpQuantiles", pp_cells);

    out << "inline constexpr LlcFactorRow kLlcFactors[] = {\n";
    for (int n : kLengths) {
        for (int p = 0; p <= kMaxLag; ++p) {
            LlcFactors fc, fct;
            if (adf_feasible(n, p, Deterministic::Constant)) {
                try {
                    fc = simulate_llc(n, p, Deterministic::Constant, llc_reps, stream);
                } catch (const std::exception&) {
                }
            }
            ++stream;
            if (adf_feasible(n, p, Deterministic::ConstantAndTrend)) {
                try {
                    fct = simulate_llc(n, p, Deterministic::ConstantAndTrend, llc_reps, stream);
                } catch (const std::exception&) {
                }
            }
            ++stream;
            out << "    {" << n << ", " << p << ", " << fmt(fc.mu) << ", " << fmt(fc.sigma)
                << ", " << fmt(fct.mu) << ", " << fmt(fct.sigma) << "},\n";
            std::cout << "llc T=" << n << " p=" << p << "\n" << std::flush;
        }
    }
    out << "};\n\n}  // namespace detail\n}  // namespace diag\n}  // namespace panelkit\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}
