#include "panelkit/dgp.hpp"

#include <cmath>
#include <random>

#include "panelkit/rng.hpp"
#include "panelkit/shocks.hpp"
#include "panelkit/transforms.hpp"

namespace panelkit {
namespace sim {

namespace {

// Stream ids for seed derivation; group-dependent streams add g * kGroupStride.
constexpr std::uint64_t kStreamGroupParams = 1;
constexpr std::uint64_t kStreamX = 2;
constexpr std::uint64_t kStreamNoise = 3;
constexpr std::uint64_t kGroupStride = 16;

std::vector<std::string> group_names(int n) {
    int width = 1;
    for (int v = n; v >= 10; v /= 10) ++width;
    std::vector<std::string> out;
    for (int g = 1; g <= n; ++g) {
        std::string s = std::to_string(g);
        out.push_back("g" + std::string(width - s.size(), '0') + s);
    }
    return out;
}

std::vector<int> period_labels(int first, int n) {
    std::vector<int> out;
    for (int t = 0; t < n; ++t) out.push_back(first + t);
    return out;
}

std::vector<double> simulate_x_path(std::mt19937_64& rng, const DGPParams& p, int length) {
    std::normal_distribution<double> innov(0.0, p.x_innovation_sd);
    std::vector<double> x(length);
    double prev = 0.0;
    for (int t = 0; t < length; ++t) {
        double e = innov(rng);
        prev = p.x_process == XProcess::RandomWalk ? prev + e : p.x_ar * prev + e;
        x[t] = prev;
    }
    return x;
}

}  // namespace

void DGPParams::validate() const {
    if (n_groups < 1 || n_periods < 3) throw UsageError("dgp: need n_groups >= 1, n_periods >= 3");
    if (theta_true.empty()) throw UsageError("dgp: theta_true must be non-empty");
    if (!(rho_min <= rho_max) || rho_min <= -2.0 || rho_max >= 0.0) {
        throw UsageError("dgp: rho range must lie inside (-2, 0)");
    }
    if (burn_in < 20) throw UsageError("dgp: burn_in must be >= 20");
    if (noise_sd < 0.0) throw UsageError("dgp: noise_sd must be >= 0");
    if (heteroskedastic && !(sigma_min > 0.0 && sigma_min <= sigma_max)) {
        throw UsageError("dgp: invalid heteroskedastic sigma range");
    }
}

PanelDataset simulate_ecm_panel(const DGPParams& params) {
    return simulate_ecm_panel(params, nullptr);
}

PanelDataset simulate_ecm_panel(const DGPParams& params, DrawnGroupParams* drawn) {
    params.validate();
    const int k = static_cast<int>(params.theta_true.size());
    const int total = params.burn_in + params.n_periods;

    PanelDataset panel(group_names(params.n_groups),
                       period_labels(params.first_period, params.n_periods));
    panel.add_variable("z");
    for (int j = 1; j <= k; ++j) panel.add_variable("x" + std::to_string(j));

    if (drawn) *drawn = DrawnGroupParams{};

    for (int g = 0; g < params.n_groups; ++g) {
        const std::uint64_t base = static_cast<std::uint64_t>(g) * kGroupStride;
        auto rng_params = make_rng(params.seed, base + kStreamGroupParams);
        std::uniform_real_distribution<double> rho_dist(params.rho_min, params.rho_max);
        double rho = rho_dist(rng_params);
        int redraws = 0;
        while (std::abs(1.0 + rho) >= 1.0) {
            if (++redraws > 100) {
                throw EstimationError("dgp: could not draw a stable adjustment speed");
            }
            rho = rho_dist(rng_params);
        }
        std::uniform_real_distribution<double> sr_dist(params.short_run_min,
                                                       params.short_run_max);
        std::vector<double> delta(k);
        for (double& d : delta) d = sr_dist(rng_params);
        std::normal_distribution<double> mu_dist(0.0, params.intercept_sd);
        double mu = params.intercept_sd > 0.0 ? mu_dist(rng_params) : 0.0;
        double sigma = params.noise_sd;
        if (params.heteroskedastic) {
            std::uniform_real_distribution<double> s_dist(params.sigma_min, params.sigma_max);
            sigma = s_dist(rng_params);
        }

        std::vector<std::vector<double>> x(k);
        for (int j = 0; j < k; ++j) {
            auto rng_x = make_rng(params.seed, base + kStreamX + static_cast<std::uint64_t>(j) *
                                                                      params.n_groups * kGroupStride);
            x[static_cast<std::size_t>(j)] = simulate_x_path(rng_x, params, total);
        }

        auto rng_noise = make_rng(params.seed, base + kStreamNoise);
        std::normal_distribution<double> eps(0.0, 1.0);

        auto theta_dot_x = [&](int t) {
            double v = 0.0;
            for (int j = 0; j < k; ++j) v += params.theta_true[j] * x[j][t];
            return v;
        };

        std::vector<double> z(total);
        z[0] = theta_dot_x(0) - mu / rho;  // start at the stochastic equilibrium
        for (int t = 1; t < total; ++t) {
            double dx_term = 0.0;
            for (int j = 0; j < k; ++j) dx_term += delta[j] * (x[j][t] - x[j][t - 1]);
            double dz = rho * (z[t - 1] - theta_dot_x(t)) + dx_term + mu +
                        (sigma > 0.0 ? sigma * eps(rng_noise) : 0.0);
            z[t] = z[t - 1] + dz;
        }

        for (int t = 0; t < params.n_periods; ++t) {
            const int src = params.burn_in + t;
            panel.set("z", static_cast<std::size_t>(g), static_cast<std::size_t>(t), z[src]);
            for (int j = 0; j < k; ++j) {
                panel.set("x" + std::to_string(j + 1), static_cast<std::size_t>(g),
                          static_cast<std::size_t>(t), x[j][src]);
            }
        }

        if (drawn) {
            drawn->rho.push_back(rho);
            drawn->short_run.push_back(delta);
            drawn->intercept.push_back(mu);
            drawn->sigma.push_back(sigma);
        }
    }
    return panel;
}

PanelDataset simulate_replication_panel(const ReplicationDGPParams& params) {
    if (params.n_groups < 2 || params.n_periods < params.shock_lookback + 8) {
        throw UsageError("replication dgp: panel too small for shocks and lags");
    }
    const int total = 60 + params.n_periods;  // burn-in for the AR states

    PanelDataset panel(group_names(params.n_groups),
                       period_labels(params.first_period, params.n_periods));
    for (const char* v : {"z1", "z2", "wti", "wti_pos", "wti_neg", "pbvr", "nim", "nocf",
                          "lr", "ta", "gdp", "bc", "rq", "cpi"}) {
        panel.add_variable(v);
    }

    // One shared oil price path: a lognormal random walk at a dollar-ish scale.
    auto rng_price = make_rng(params.seed, 1001);
    std::normal_distribution<double> price_innov(0.0, 0.15);
    std::vector<double> price(total);
    double lp = std::log(60.0);
    for (int t = 0; t < total; ++t) {
        lp += price_innov(rng_price);
        price[t] = std::exp(lp);
    }
    Series price_s(static_cast<std::size_t>(total));
    for (int t = 0; t < total; ++t) price_s.set(static_cast<std::size_t>(t), price[t]);
    Series wti = log_return(price_s);
    indicators::ShockSeries shocks = indicators::shock_decompose(price_s, params.shock_lookback);

    // Shared macro controls, duplicated per entity below.
    auto macro_ar = [&](std::uint64_t stream, double mean, double phi, double sd) {
        auto rng = make_rng(params.seed, stream);
        std::normal_distribution<double> innov(0.0, sd);
        std::vector<double> out(total);
        double state = mean;
        for (int t = 0; t < total; ++t) {
            state = mean + phi * (state - mean) + innov(rng);
            out[t] = state;
        }
        return out;
    };
    auto gdp = macro_ar(1002, 1.5, 0.5, 2.0);
    auto bc = macro_ar(1003, 32.0, 0.8, 2.5);
    auto rq = macro_ar(1004, 0.7, 0.8, 0.03);
    auto cpi = macro_ar(1005, 2.5, 0.8, 0.12);

    for (int g = 0; g < params.n_groups; ++g) {
        const std::uint64_t base = 2000 + static_cast<std::uint64_t>(g) * 32;
        auto rng_g = make_rng(params.seed, base);
        std::normal_distribution<double> n01(0.0, 1.0);
        std::uniform_real_distribution<double> rho_dist(-0.9, -0.4);
        const double rho = rho_dist(rng_g);
        const double theta_wti = 10.0;
        const double theta_pbvr = 0.2;
        const double mu = 0.5 * n01(rng_g);

        auto entity_ar = [&](double mean, double phi, double sd) {
            std::vector<double> out(total);
            double state = mean;
            for (int t = 0; t < total; ++t) {
                state = mean + phi * (state - mean) + sd * n01(rng_g);
                out[t] = state;
            }
            return out;
        };
        auto pbvr = entity_ar(0.8, 0.7, 0.10);
        auto nim = entity_ar(45.0, 0.6, 4.0);
        auto nocf = entity_ar(40.0, 0.4, 30.0);
        auto lr = entity_ar(1.15, 0.7, 0.08);
        auto ta = entity_ar(4.6, 0.9, 0.25);

        std::vector<double> z(total);
        auto eq = [&](int t) {
            double w = wti.has(static_cast<std::size_t>(t)) ? wti.at(static_cast<std::size_t>(t)) : 0.0;
            return theta_wti * w + theta_pbvr * pbvr[t];
        };
        z[0] = eq(0) - mu / rho + 20.0;
        for (int t = 1; t < total; ++t) {
            double dz = rho * (z[t - 1] - eq(t)) + mu + 1.0 * n01(rng_g);
            z[t] = z[t - 1] + dz;
        }

        for (int t = 0; t < params.n_periods; ++t) {
            const int src = 60 + t;
            const std::size_t gi = static_cast<std::size_t>(g);
            const std::size_t ti = static_cast<std::size_t>(t);
            panel.set("z1", gi, ti, z[src]);
            panel.set("z2", gi, ti, z[src] + 0.05 * n01(rng_g));
            panel.set("wti", gi, ti, wti.at(static_cast<std::size_t>(src)));
            panel.set("wti_pos", gi, ti, shocks.positive.at(static_cast<std::size_t>(src)));
            panel.set("wti_neg", gi, ti, shocks.negative.at(static_cast<std::size_t>(src)));
            panel.set("pbvr", gi, ti, pbvr[src]);
            panel.set("nim", gi, ti, nim[src]);
            panel.set("nocf", gi, ti, nocf[src]);
            panel.set("lr", gi, ti, lr[src]);
            panel.set("ta", gi, ti, ta[src]);
            panel.set("gdp", gi, ti, gdp[src]);
            panel.set("bc", gi, ti, bc[src]);
            panel.set("rq", gi, ti, rq[src]);
            panel.set("cpi", gi, ti, cpi[src]);
        }
    }
    return panel;
}

}  // namespace sim
}  // namespace panelkit
