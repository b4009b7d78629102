#include "panelkit/run_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace panelkit {
namespace report {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

long to_long(const std::string& key, const std::string& v) {
    long x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) {
        throw UsageError("config key '" + key + "': expected an integer, got '" + v + "'");
    }
    return x;
}

double to_double(const std::string& key, const std::string& v) {
    double x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) {
        throw UsageError("config key '" + key + "': expected a number, got '" + v + "'");
    }
    return x;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("config key '" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<int> parse_models(const std::string& v) {
    std::vector<int> out;
    for (const auto& item : split_list(v)) {
        auto dash = item.find('-');
        if (dash != std::string::npos) {
            int lo = static_cast<int>(to_long("models", item.substr(0, dash)));
            int hi = static_cast<int>(to_long("models", item.substr(dash + 1)));
            for (int m = lo; m <= hi; ++m) out.push_back(m);
        } else {
            out.push_back(static_cast<int>(to_long("models", item)));
        }
    }
    return out;
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string RunConfig::shock_var(const std::string& variant) const {
    if (variant == "returns") return returns_var;
    if (variant == "positive") return positive_var;
    if (variant == "negative") return negative_var;
    throw UsageError("unknown shock variant '" + variant + "'");
}

void RunConfig::apply_kv(const std::string& key, const std::string& raw) {
    const std::string value = trim(raw);
    if (key == "input") {
        input_path = value;
    } else if (key == "simulate") {
        if (value != "ecm" && value != "replication") {
            throw UsageError("config key 'simulate': expected ecm|replication");
        }
        simulate_mode = value;
    } else if (key == "entity_col") {
        entity_col = value;
    } else if (key == "period_col") {
        period_col = value;
    } else if (key == "zscore") {
        if (value != "boyd" && value != "yeyati") {
            throw UsageError("config key 'zscore': expected boyd|yeyati");
        }
        zscore_variant = value;
    } else if (key == "dependent") {
        dependent_override = value;
    } else if (key == "shocks") {
        if (value == "all") {
            shock_variants = {"returns", "positive", "negative"};
        } else {
            shock_variants = split_list(value);
            for (const auto& v : shock_variants) {
                if (v != "returns" && v != "positive" && v != "negative") {
                    throw UsageError("config key 'shocks': unknown variant '" + v + "'");
                }
            }
        }
    } else if (key == "models") {
        models = parse_models(value);
    } else if (key == "controls") {
        controls = split_list(value);
    } else if (key == "returns_var") {
        returns_var = value;
    } else if (key == "positive_var") {
        positive_var = value;
    } else if (key == "negative_var") {
        negative_var = value;
    } else if (key == "valuation_var") {
        valuation_var = value;
    } else if (key == "p") {
        p = static_cast<int>(to_long(key, value));
    } else if (key == "q") {
        q = static_cast<int>(to_long(key, value));
    } else if (key == "drop_entity") {
        drop_entity = value;
    } else if (key == "window_n") {
        window.n = static_cast<int>(to_long(key, value));
    } else if (key == "window_min_obs") {
        window.min_obs = static_cast<int>(to_long(key, value));
    } else if (key == "window_population_std") {
        window.population_std = to_bool(key, value);
    } else if (key == "shock_lookback") {
        shock_lookback = static_cast<int>(to_long(key, value));
    } else if (key == "derive_car") {
        derive_car = value;
    } else if (key == "derive_net_income") {
        derive_net_income = value;
    } else if (key == "derive_total_assets") {
        derive_total_assets = value;
    } else if (key == "derive_price") {
        derive_price = value;
    } else if (key == "det") {
        if (value == "constant") {
            unit_root.deterministic = diag::Deterministic::Constant;
        } else if (value == "constant_trend") {
            unit_root.deterministic = diag::Deterministic::ConstantAndTrend;
        } else {
            throw UsageError("config key 'det': expected constant|constant_trend");
        }
    } else if (key == "ur_lag") {
        unit_root.fixed_lag = static_cast<int>(to_long(key, value));
    } else if (key == "ur_ic_selection") {
        unit_root.ic_selection = to_bool(key, value);
    } else if (key == "ur_max_lags") {
        unit_root.max_lags = static_cast<int>(to_long(key, value));
    } else if (key == "pmg_max_iter") {
        pmg_options.max_iter = static_cast<int>(to_long(key, value));
    } else if (key == "pmg_theta_tol") {
        pmg_options.theta_tol = to_double(key, value);
    } else if (key == "pmg_robust_se") {
        pmg_options.robust_se = to_bool(key, value);
    } else if (key == "seed") {
        seed = static_cast<std::uint64_t>(to_long(key, value));
    } else if (key == "out") {
        out_dir = value;
    } else if (key == "format") {
        formats.clear();
        for (const auto& f : split_list(value)) formats.push_back(parse_format(f));
    } else if (key == "mc_procedure") {
        mc_procedure = value;
    } else if (key == "mc_reps") {
        mc_reps = static_cast<int>(to_long(key, value));
    } else if (key == "dgp_n_groups") {
        dgp.n_groups = static_cast<int>(to_long(key, value));
    } else if (key == "dgp_n_periods") {
        dgp.n_periods = static_cast<int>(to_long(key, value));
    } else if (key == "dgp_noise_sd") {
        dgp.noise_sd = to_double(key, value);
    } else if (key == "dgp_theta") {
        dgp.theta_true.clear();
        for (const auto& v : split_list(value)) dgp.theta_true.push_back(to_double(key, v));
    } else if (key == "dgp_rho_min") {
        dgp.rho_min = to_double(key, value);
    } else if (key == "dgp_rho_max") {
        dgp.rho_max = to_double(key, value);
    } else if (key == "dgp_x_process") {
        if (value == "random_walk") {
            dgp.x_process = sim::XProcess::RandomWalk;
        } else if (value == "stationary_ar") {
            dgp.x_process = sim::XProcess::StationaryAr;
        } else {
            throw UsageError("config key 'dgp_x_process': expected random_walk|stationary_ar");
        }
    } else if (key == "dgp_x_ar") {
        dgp.x_ar = to_double(key, value);
    } else if (key == "dgp_burn_in") {
        dgp.burn_in = static_cast<int>(to_long(key, value));
    } else if (key == "dgp_heteroskedastic") {
        dgp.heteroskedastic = to_bool(key, value);
    } else {
        throw UsageError("unknown config key '" + key + "'");
    }
}

void RunConfig::validate() const {
    if (input_path.has_value() == simulate_mode.has_value()) {
        throw UsageError("exactly one input source required: set input=PATH or "
                         "simulate=ecm|replication");
    }
    if (shock_variants.empty()) throw UsageError("no shock variants requested");
    for (int m : models) {
        if (m < 1 || m > 1 + static_cast<int>(controls.size())) {
            throw UsageError("model number " + std::to_string(m) +
                             " outside 1.." + std::to_string(1 + controls.size()));
        }
    }
    if (formats.empty()) throw UsageError("no output formats requested");
}

std::string RunConfig::canonical_text() const {
    std::ostringstream os;
    os << "controls=";
    for (std::size_t i = 0; i < controls.size(); ++i) os << (i ? "," : "") << controls[i];
    os << "\nderive=" << derive_car << ',' << derive_net_income << ',' << derive_total_assets
       << ',' << derive_price;
    os << "\ndependent=" << dependent();
    os << "\ndgp=" << dgp.n_groups << ',' << dgp.n_periods << ',' << dgp.noise_sd << ','
       << static_cast<int>(dgp.x_process) << ',' << dgp.burn_in;
    os << "\ndgp_theta=";
    for (std::size_t i = 0; i < dgp.theta_true.size(); ++i) {
        os << (i ? "," : "") << dgp.theta_true[i];
    }
    os << "\ndrop_entity=" << drop_entity.value_or("");
    os << "\nformats=";
    for (std::size_t i = 0; i < formats.size(); ++i) {
        os << (i ? "," : "") << format_extension(formats[i]);
    }
    os << "\ninput=" << input_path.value_or("");
    os << "\nmc=" << mc_procedure << ',' << mc_reps;
    os << "\nmodels=";
    for (std::size_t i = 0; i < models.size(); ++i) os << (i ? "," : "") << models[i];
    os << "\npq=" << p << ',' << q;
    os << "\nseed=" << seed;
    os << "\nshock_lookback=" << shock_lookback;
    os << "\nshock_vars=" << returns_var << ',' << positive_var << ',' << negative_var << ','
       << valuation_var;
    os << "\nshocks=";
    for (std::size_t i = 0; i < shock_variants.size(); ++i) {
        os << (i ? "," : "") << shock_variants[i];
    }
    os << "\nsimulate=" << simulate_mode.value_or("");
    os << "\nur=" << static_cast<int>(unit_root.deterministic) << ',' << unit_root.fixed_lag
       << ',' << unit_root.ic_selection << ',' << unit_root.max_lags;
    os << "\nwindow=" << window.n << ',' << window.min_obs << ',' << window.population_std;
    os << "\nzscore=" << zscore_variant << '\n';
    return os.str();
}

std::uint64_t RunConfig::hash() const { return fnv1a(canonical_text()); }

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig config;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_no) +
                             ": expected key=value, got '" + line + "'");
        }
        config.apply_kv(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

}  // namespace report
}  // namespace panelkit
