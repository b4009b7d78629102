#include "panelkit/distributions.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numbers>

namespace panelkit {
namespace diag {

namespace {

const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);

// MacKinnon response-surface coefficients for the one-variable unit-root t
// statistic (MacKinnon 1994; updated tables as distributed with MacKinnon
// 2010). p = Phi(poly(tau)); the cubic branch covers moderate statistics, the
// quadratic branch the far-left tail, split at tau_star.
struct MacKinnonSurface {
    double tau_star;
    double tau_min;
    double tau_max;
    double small_p[3];  // c0 + c1*tau + c2*tau^2
    double large_p[4];  // c0 + c1*tau + c2*tau^2 + c3*tau^3
};

constexpr MacKinnonSurface kSurfaceConstant = {
    -1.61,
    -18.83,
    2.74,
    {2.1659, 1.4412, 0.038269},
    {1.7339, 0.93202, -0.12745, -0.010368},
};

constexpr MacKinnonSurface kSurfaceConstantTrend = {
    -2.89,
    -16.18,
    0.70,
    {3.2512, 1.6047, 0.049588},
    {2.5261, 0.61654, -0.37956, -0.060285},
};

// Frees null: Q = a(T) (chisq_{T-1} - (T-1)) + b(T) (chisq_{d} - d) with
// d = T(T-3)/2, where a and b are the two distinct nonzero eigenvalues of the
// centered squared-Spearman kernel over random rank vectors. They follow in
// closed form from the kernel's trace and Frobenius norm, which reduce to
// exact joint moments of ranks sampled without replacement.
void frees_weights_impl(int t, double& a, double& b, double& df1, double& df2) {
    if (t < 4) throw UsageError("Frees statistic requires T >= 4 periods");
    const double T = static_cast<double>(t);
    const double h1 = T - 1.0;
    const double h2 = T * (T - 3.0) / 2.0;

    // Power sums of the centered scaled ranks v_r = c (r - (T+1)/2),
    // c^2 = 12 / (T (T^2-1)): P2 = 1 and P4 below; odd sums vanish.
    const double p4 = 3.0 * (3.0 * T * T - 7.0) / (5.0 * T * (T * T - 1.0));

    // Joint moments over distinct time indices.
    const double e2 = 1.0 / T;
    const double e11 = -1.0 / (T * (T - 1.0));
    const double e4 = p4 / T;
    const double e31 = -p4 / (T * (T - 1.0));
    const double e22 = (1.0 - p4) / (T * (T - 1.0));
    const double e211 = (2.0 * p4 - 1.0) / (T * (T - 1.0) * (T - 2.0));
    const double e1111 = (3.0 - 6.0 * p4) / (T * (T - 1.0) * (T - 2.0) * (T - 3.0));

    // Feature covariance invariants: features are x_t^2 and sqrt(2) x_s x_t.
    const double pairs = T * (T - 1.0) / 2.0;
    const double trace = T * (e4 - e2 * e2) + T * (T - 1.0) * (e22 - e11 * e11);
    double frob = 0.0;
    frob += T * std::pow(e4 - e2 * e2, 2);                              // diag-diag same
    frob += T * (T - 1.0) * std::pow(e22 - e2 * e2, 2);                 // diag-diag distinct
    frob += 2.0 * T * (T - 1.0) * 2.0 * std::pow(e31 - e2 * e11, 2);    // diag-off sharing
    frob += T * (T - 1.0) * (T - 2.0) * 2.0 * std::pow(e211 - e2 * e11, 2);
    frob += pairs * 4.0 * std::pow(e22 - e11 * e11, 2);                 // off-off same
    frob += pairs * 2.0 * (T - 2.0) * 4.0 * std::pow(e211 - e11 * e11, 2);
    frob += pairs * (pairs - 1.0 - 2.0 * (T - 2.0)) * 4.0 * std::pow(e1111 - e11 * e11, 2);

    // Solve a h1 + b h2 = trace, a^2 h1 + b^2 h2 = frob for the eigenvalue
    // pair; the larger eigenvalue carries the larger multiplicity h2.
    const double qa = h2 * (h1 + h2);
    const double qb = -2.0 * trace * h2;
    const double qc = trace * trace - frob * h1;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) throw EstimationError("frees weights: negative discriminant");
    b = (-qb + std::sqrt(disc)) / (2.0 * qa);
    a = (trace - b * h2) / h1;
    if (!(a > 0.0) || !(b > 0.0)) {
        throw EstimationError("frees weights: non-positive kernel eigenvalues");
    }
    df1 = h1;
    df2 = h2;
}

}  // namespace

double normal_cdf(double z) { return boost::math::cdf(kStdNormal, z); }

double normal_sf(double z) { return boost::math::cdf(boost::math::complement(kStdNormal, z)); }

double normal_quantile(double p) { return boost::math::quantile(kStdNormal, p); }

double chi_squared_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    boost::math::chi_squared_distribution<double> dist(df);
    return boost::math::cdf(boost::math::complement(dist, x));
}

double mackinnon_pvalue(double tau, Deterministic det) {
    const MacKinnonSurface& s =
        det == Deterministic::Constant ? kSurfaceConstant : kSurfaceConstantTrend;
    if (tau > s.tau_max) return 1.0;
    if (tau < s.tau_min) return 1e-16;
    double z;
    if (tau <= s.tau_star) {
        z = s.small_p[0] + tau * (s.small_p[1] + tau * s.small_p[2]);
    } else {
        z = s.large_p[0] + tau * (s.large_p[1] + tau * (s.large_p[2] + tau * s.large_p[3]));
    }
    return normal_cdf(z);
}

double imhof_upper_tail(double x, const double* lambda, const double* df, int terms) {
    // Recenter to the raw weighted chi-square sum, then invert:
    //   P(sum lambda_r chisq_r < q) = 1/2 - (1/pi) int_0^inf sin(theta(u)) / (u rho(u)) du
    double q = x;
    double lam_max = 0.0;
    for (int r = 0; r < terms; ++r) {
        if (lambda[r] <= 0.0) throw UsageError("imhof_upper_tail expects positive weights");
        q += lambda[r] * df[r];
        lam_max = std::max(lam_max, lambda[r]);
    }
    if (q <= 0.0) return 1.0;  // the weighted chi-square sum is a.s. positive

    auto theta = [&](double u) {
        double v = -0.5 * q * u;
        for (int r = 0; r < terms; ++r) v += 0.5 * df[r] * std::atan(lambda[r] * u);
        return v;
    };
    auto log_rho = [&](double u) {
        double v = 0.0;
        for (int r = 0; r < terms; ++r) {
            v += 0.25 * df[r] * std::log1p(lambda[r] * lambda[r] * u * u);
        }
        return v;
    };
    auto integrand = [&](double u) {
        if (u <= 0.0) {
            // limit u -> 0: theta'(0)
            double slope = -0.5 * q;
            for (int r = 0; r < terms; ++r) slope += 0.5 * df[r] * lambda[r];
            return slope;
        }
        double lr = log_rho(u);
        if (lr > 700.0) return 0.0;
        return std::sin(theta(u)) / (u * std::exp(lr));
    };

    // Step size keyed to the oscillation: the phase rate is bounded by
    // |q|/2 + sum h_r lambda_r / 2, so a fixed fraction of a period per step
    // keeps composite Simpson accurate however slowly the envelope decays.
    double rate = 0.5 * q;
    for (int r = 0; r < terms; ++r) rate += 0.5 * df[r] * lambda[r];
    const double step = (std::numbers::pi / 8.0) / rate;

    double integral = 0.0;
    double u = 0.0;
    double f0 = integrand(0.0);
    const double u_hard_max = step * 5e7;
    while (u < u_hard_max) {
        // Simpson over [u, u+step] with two panels.
        double f1 = integrand(u + 0.25 * step);
        double f2 = integrand(u + 0.5 * step);
        double f3 = integrand(u + 0.75 * step);
        double f4 = integrand(u + step);
        integral += (step / 12.0) * (f0 + 4.0 * f1 + 2.0 * f2 + 4.0 * f3 + f4);
        u += step;
        f0 = f4;
        // Envelope 1/(u rho(u)) bounds the remaining oscillating tail.
        if (u > 10.0 / lam_max && log_rho(u) + std::log(u) > 23.0) break;
    }

    double cdf = 0.5 - integral / std::numbers::pi;
    if (cdf < 0.0) cdf = 0.0;
    if (cdf > 1.0) cdf = 1.0;
    return 1.0 - cdf;
}

void frees_kernel_weights(int t_periods, double& a, double& b, double& df1, double& df2) {
    frees_weights_impl(t_periods, a, b, df1, df2);
}

double frees_pvalue(double stat, int t_periods) {
    double a, b, df1, df2;
    frees_weights_impl(t_periods, a, b, df1, df2);
    const double lambda[2] = {a, b};
    const double df[2] = {df1, df2};
    return imhof_upper_tail(stat, lambda, df, 2);
}

double frees_critical_value(double alpha, int t_periods) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("alpha must lie in (0, 1)");
    double lo = -1.0, hi = 1.0;
    while (frees_pvalue(hi, t_periods) > alpha && hi < 1e6) hi *= 2.0;
    while (frees_pvalue(lo, t_periods) < alpha && lo > -1e6) lo *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (frees_pvalue(mid, t_periods) > alpha) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * (1.0 + std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace diag
}  // namespace panelkit
