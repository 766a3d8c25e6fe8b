#include "lrd/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrd/fft.hpp"
#include "lrd/special.hpp"

namespace lrd {

namespace {
constexpr double kDegenerateScale = 1e-12;

double llog(double n) { return std::log(std::log(n)); }

double karamata_B(double beta) { return beta_function(2.0 * beta - 1.0, 1.0 - beta); }
}  // namespace

CovarianceStructure autocovariances(const CoefficientSpec& spec, double var_eps,
                                    std::size_t n_max) {
    const std::vector<double> c = make_coefficients(spec);
    CovarianceStructure cov;
    cov.var_eps = var_eps;
    const std::size_t reach = std::min<std::size_t>(n_max, c.size() - 1);
    cov.rho = (c.size() + reach > 2048)
                  ? autocorrelation_fft(c, reach)
                  : autocorrelation_direct(c, reach);
    cov.rho.resize(n_max + 1, 0.0);  // lags beyond M have no overlap
    for (auto& r : cov.rho) r *= var_eps;
    return cov;
}

CovarianceStructure autocovariances_direct(const CoefficientSpec& spec,
                                           double var_eps, std::size_t n_max) {
    const std::vector<double> c = make_coefficients(spec);
    CovarianceStructure cov;
    cov.var_eps = var_eps;
    const std::size_t reach = std::min<std::size_t>(n_max, c.size() - 1);
    cov.rho = autocorrelation_direct(c, reach);
    cov.rho.resize(n_max + 1, 0.0);
    for (auto& r : cov.rho) r *= var_eps;
    return cov;
}

double autocovariance_infinite(double beta, double l0_const, double var_eps,
                               std::uint64_t k) {
    const double kd = static_cast<double>(k);
    if (k == 0) {
        // rho_0 = L0^2 (1 + zeta(2 beta)) Var(eps)
        const double c2 = l0_const * l0_const;
        return var_eps * c2 * (1.0 + riemann_zeta(2.0 * beta));
    }
    const std::uint64_t L = std::max<std::uint64_t>(4 * k, 10000);
    double head = std::pow(kd, -beta);  // c_0 * c_k term (L0 = const folded below)
    for (std::uint64_t l = 1; l <= L; ++l) {
        const double ld = static_cast<double>(l);
        head += std::pow(ld, -beta) * std::pow(ld + kd, -beta);
    }
    // tail: int_{L+1/2}^inf x^-b (x+k)^-b dx
    //     = k^(1-2b)/(2b-1) * int_0^{v0^(2b-1)} (1 + r^(1/(2b-1)))^-b dr,
    // v0 = k/(L+1/2), via the substitutions x = k/u, u = r^(1/(2b-1)).
    const double r2 = 2.0 * beta - 1.0;
    const double v0 = kd / (static_cast<double>(L) + 0.5);
    const double upper = std::pow(v0, r2);
    const double tail =
        std::pow(kd, 1.0 - 2.0 * beta) / r2 *
        adaptive_simpson(
            [&](double r) { return std::pow(1.0 + std::pow(r, 1.0 / r2), -beta); },
            0.0, upper, 1e-13);
    return var_eps * l0_const * l0_const * (head + tail);
}

double sigma2_from_covariances(const CovarianceStructure& cov, std::uint64_t n) {
    if (n < 1) throw std::domain_error("sigma2_from_covariances: n < 1");
    if (cov.rho.size() < n) {
        throw std::invalid_argument("sigma2_from_covariances: need lags to n-1");
    }
    const double nd = static_cast<double>(n);
    double s = nd * cov.rho[0];
    for (std::uint64_t k = 1; k < n; ++k) {
        s += 2.0 * (nd - static_cast<double>(k)) * cov.rho[k];
    }
    return s;
}

namespace {

// Streaming innovation-weight form: Var(S_n) = Var(eps) * sum_t A_t^2 where
// A_t = sum of the coefficient window seen by innovation t.
double sigma2_stream(const CoefficientSpec& spec, double var_eps,
                     std::uint64_t n) {
    const std::uint64_t m = spec.truncation_m();
    double total = 0.0;
    // t = 1..n: window c_0..c_{min(M, n-t)}: prefix S(j), j = 0..n-1
    double S = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (j <= m) S += spec.coefficient(j);
        total += S * S;
    }
    // s = 0..M-1: window sum W(s) = S(min(M, s+n)) - S(s)
    double W = 0.0;
    for (std::uint64_t j = 1; j <= std::min(m, n); ++j) W += spec.coefficient(j);
    for (std::uint64_t s = 0; s < m; ++s) {
        total += W * W;
        W -= spec.coefficient(s + 1);
        if (s + n + 1 <= m) W += spec.coefficient(s + n + 1);
    }
    return var_eps * total;
}

// Large-M variant: exact streaming for s < s0, Euler-Maclaurin window sums on
// a log-spaced midpoint grid beyond. Constant L0 only.
double sigma2_large_m(const CoefficientSpec& spec, double var_eps,
                      std::uint64_t n) {
    if (spec.slowly_varying().kind != SlowlyVarying::Kind::constant) {
        throw std::domain_error("sigma2_exact: large M requires constant L0");
    }
    const double c0sq_scale = spec.slowly_varying().param;  // L0 constant
    const double beta = spec.beta();
    const std::uint64_t mi = spec.truncation_m();
    const double m = static_cast<double>(mi);
    const double ndd = static_cast<double>(n);
    const std::uint64_t s0 = std::min<std::uint64_t>(64 * n, mi);

    double total = 0.0;
    double S = 0.0;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (j <= mi) S += (j == 0) ? 1.0 : std::pow(static_cast<double>(j), -beta);
        total += S * S;
    }
    double W = 0.0;
    for (std::uint64_t j = 1; j <= std::min(n, mi); ++j)
        W += std::pow(static_cast<double>(j), -beta);
    for (std::uint64_t s = 0; s < s0; ++s) {
        total += W * W;
        W -= std::pow(static_cast<double>(s + 1), -beta);
        if (s + n + 1 <= mi) W += std::pow(static_cast<double>(s + n + 1), -beta);
    }
    // tail sum_{s=s0}^{M-1} g(s), g(s) = (window of length min(n, M-s))^2,
    // midpoint rule in w = log s; kink at s = M - n.
    auto g = [&](double s) {
        const double len = std::min(ndd, m - s);
        const double w = power_window_sum(s, len, beta);
        return w * w;
    };
    auto integrate = [&](double lo, double hi) {
        if (hi <= lo) return 0.0;
        const int nodes = 200000;
        const double wlo = std::log(lo), whi = std::log(hi);
        const double dw = (whi - wlo) / nodes;
        double acc = 0.0;
        for (int i = 0; i < nodes; ++i) {
            const double s = std::exp(wlo + (i + 0.5) * dw);
            acc += g(s) * s * dw;
        }
        return acc;
    };
    const double a = static_cast<double>(s0) - 0.5;
    const double b = m - 0.5;
    const double kink = m - ndd;
    if (kink > a) {
        total += integrate(a, kink) + integrate(kink, b);
    } else {
        total += integrate(a, b);
    }
    return var_eps * c0sq_scale * c0sq_scale * total;
}

}  // namespace

double sigma2_exact(const CoefficientSpec& spec, double var_eps, std::uint64_t n) {
    if (n < 1) throw std::domain_error("sigma2_exact: n < 1");
    const std::uint64_t m = spec.truncation_m();
    if (m + n <= (1ULL << 27) || m <= 64 * n) {
        return sigma2_stream(spec, var_eps, n);
    }
    return sigma2_large_m(spec, var_eps, n);
}

double sigma_n1_asymptotic(const CoefficientSpec& spec, double var_eps,
                           std::uint64_t n) {
    const double beta = spec.beta();
    const double nd = static_cast<double>(n);
    const double l0 = spec.slowly_varying()(nd);
    const double c2 = var_eps * karamata_B(beta) /
                      ((1.0 - beta) * (3.0 - 2.0 * beta));
    return std::sqrt(c2) * std::pow(nd, (3.0 - 2.0 * beta) / 2.0) * l0;
}

double sigma_n2_asymptotic(const CoefficientSpec& spec, double var_eps,
                           std::uint64_t n) {
    const double beta = spec.beta();
    const double nd = static_cast<double>(n);
    const double l0 = spec.slowly_varying()(nd);
    // Eq-(2) exponent with unit constant; L is the covariance-level slowly
    // varying factor Var(eps) B L0^2.
    const double L = var_eps * karamata_B(beta) * l0 * l0;
    return std::pow(nd, 1.0 - (2.0 * beta - 1.0)) * L;
}

RateSchedule rate_schedule(const CoefficientSpec& spec, std::uint64_t n,
                           double c_delta) {
    if (n < 16) throw std::domain_error("rate_schedule: n must be >= 16");
    const double beta = spec.beta();
    const double nd = static_cast<double>(n);
    const double l0 = spec.slowly_varying()(nd);
    const double ll = llog(nd);
    const double lg = std::log(nd);
    RateSchedule r{};
    r.delta_n = c_delta * std::pow(nd, -(2.0 * beta - 1.0)) * l0 * l0 * ll;
    r.a_n = std::pow(nd, -(beta - 0.5)) * l0 * std::sqrt(ll);
    const int p = 2;
    const double crit = (p + 1) * (2.0 * beta - 1.0);
    if (crit > 1.0) {
        r.d_regime = 1;
        r.d_n2 = std::pow(nd, -(1.0 - beta)) / l0 * std::pow(lg, 2.5) *
                 std::pow(ll, 0.75);
    } else {
        r.d_regime = 2;
        r.d_n2 = std::pow(nd, -static_cast<double>(p) * (beta - 0.5)) *
                 std::pow(l0, p) * std::sqrt(lg) * std::pow(ll, 0.75);
    }
    return r;
}

ScalingConstants sigma_constants(const CoefficientSpec& spec, double var_eps,
                                 std::uint64_t n, double c_delta) {
    if (n < 1) throw std::domain_error("sigma_constants: n < 1");
    ScalingConstants sc;
    sc.n = n;
    sc.beta = spec.beta();
    sc.c_delta = c_delta;
    sc.sigma_n1_exact = std::sqrt(sigma2_exact(spec, var_eps, n));
    sc.sigma_n1_asym = sigma_n1_asymptotic(spec, var_eps, n);
    sc.sigma_n2_asym = sigma_n2_asymptotic(spec, var_eps, n);
    if (n >= 16) {
        const RateSchedule r = rate_schedule(spec, n, c_delta);
        sc.delta_n = r.delta_n;
        sc.a_n = r.a_n;
        sc.d_n2 = r.d_n2;
    }
    return sc;
}

std::string ScalingConstants::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"n\":" << n << ",\"beta\":" << beta
       << ",\"sigma_n1_exact\":" << sigma_n1_exact
       << ",\"sigma_n1_asym\":" << sigma_n1_asym
       << ",\"sigma_n2_asym\":" << sigma_n2_asym << ",\"delta_n\":" << delta_n
       << ",\"a_n\":" << a_n << ",\"d_n2\":" << d_n2
       << ",\"C_delta\":" << c_delta << "}";
    return os.str();
}

double lil_constant(double beta, int p) {
    if (!(beta > 0.5 && beta < 1.0)) {
        throw std::domain_error("lil_constant: beta outside (0.5,1)");
    }
    if (p < 1) throw std::domain_error("lil_constant: p must be >= 1");
    const double c2 = karamata_B(beta) / ((1.0 - beta) * (3.0 - 2.0 * beta));
    return std::sqrt(c2);
}

double lil_integral_quadrature(double beta) {
    if (!(beta > 0.5 && beta < 1.0)) {
        throw std::domain_error("lil_integral_quadrature: beta outside (0.5,1)");
    }
    // int_0^1 x^-b (1+x)^-b dx with x = t^(1/(1-b)):
    //   = 1/(1-b) int_0^1 (1 + t^(1/(1-b)))^-b dt
    // int_1^inf with x = 1/s, s = r^(1/(2b-1)):
    //   = 1/(2b-1) int_0^1 (1 + r^(1/(2b-1)))^-b dr
    const double e1 = 1.0 / (1.0 - beta);
    const double e2 = 1.0 / (2.0 * beta - 1.0);
    const double i1 =
        adaptive_simpson([&](double t) { return std::pow(1.0 + std::pow(t, e1), -beta); },
                         0.0, 1.0, 1e-13) /
        (1.0 - beta);
    const double i2 =
        adaptive_simpson([&](double r) { return std::pow(1.0 + std::pow(r, e2), -beta); },
                         0.0, 1.0, 1e-13) /
        (2.0 * beta - 1.0);
    return i1 + i2;
}

// ---------------------------------------------------------------------------

bool LimitLaw::degenerate() const {
    return kind != LimitKind::standard_normal && std::abs(scale) < kDegenerateScale;
}

double LimitLaw::cdf(double w) const {
    switch (kind) {
        case LimitKind::standard_normal:
            return normal_cdf(w);
        case LimitKind::z1_squared_scaled: {
            if (scale > 0.0) return chi_squared1_cdf(w / scale);
            // scale < 0: P(sZ^2 <= w) = P(Z^2 >= w/s)
            return 1.0 - chi_squared1_cdf(w / scale);
        }
        case LimitKind::z1_cubed_scaled: {
            const double q = std::cbrt(w / scale);
            return (scale > 0.0) ? normal_cdf(q) : 1.0 - normal_cdf(q);
        }
    }
    return 0.0;
}

double LimitLaw::median_abs() const {
    const double z75 = normal_quantile(0.75);
    switch (kind) {
        case LimitKind::standard_normal:
            return z75;
        case LimitKind::z1_squared_scaled:
            return std::abs(scale) * z75 * z75;
        case LimitKind::z1_cubed_scaled:
            return std::abs(scale) * z75 * z75 * z75;
    }
    return 0.0;
}

LimitLaw limit_law_squared(double scale) {
    return LimitLaw{LimitKind::z1_squared_scaled, scale};
}
LimitLaw limit_law_cubed(double scale) {
    return LimitLaw{LimitKind::z1_cubed_scaled, scale};
}
LimitLaw limit_law_normal() { return LimitLaw{LimitKind::standard_normal, 1.0}; }

}  // namespace lrd
