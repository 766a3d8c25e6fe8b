#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrd/coefficients.hpp"

namespace lrd {

// Exact autocovariances of the truncated model:
//   rho_k = Var(eps) * sum_l c_l c_{l+k},  k = 0..n_max
struct CovarianceStructure {
    double var_eps = 1.0;
    std::vector<double> rho;
};

// Production path is one FFT autocorrelation of the coefficient array; the
// direct O(M n_max) sum is the small-case oracle.
CovarianceStructure autocovariances(const CoefficientSpec& spec, double var_eps,
                                    std::size_t n_max);
CovarianceStructure autocovariances_direct(const CoefficientSpec& spec,
                                           double var_eps, std::size_t n_max);

// Infinite-M autocovariance at lag k (constant L0 only): exact head sum plus
// an analytic tail integral. Realizes the Karamata limit
// rho_k ~ Var(eps) B(2b-1, 1-b) L0^2 k^{-(2b-1)}.
double autocovariance_infinite(double beta, double l0_const, double var_eps,
                               std::uint64_t k);

// Var(sum_{i<=n} X_i) of the truncated model, exact.
//   - covariance route: n rho_0 + 2 sum (n-k) rho_k  (needs n_max >= n-1)
//   - innovation-weight route: streams prefix sums of c, O(n+M)
//   - large-M route: same quantity with the tail of the s-sum evaluated by
//     log-grid midpoint quadrature on the Euler-Maclaurin window sums
double sigma2_from_covariances(const CovarianceStructure& cov, std::uint64_t n);
double sigma2_exact(const CoefficientSpec& spec, double var_eps, std::uint64_t n);

struct ScalingConstants {
    std::uint64_t n = 0;
    double beta = 0.0;
    double sigma_n1_exact = 0.0;
    double sigma_n1_asym = 0.0;
    double sigma_n2_asym = 0.0;
    double delta_n = 0.0;
    double a_n = 0.0;
    double d_n2 = 0.0;
    double c_delta = 1.0;
    std::string to_json() const;
};

// Exact scale from the covariance structure (or the streaming route when cov
// does not reach lag n-1), asymptotic forms from the Karamata-limit closed
// formula, and the rate schedule.
ScalingConstants sigma_constants(const CoefficientSpec& spec, double var_eps,
                                 std::uint64_t n, double c_delta = 1.0);

double sigma_n1_asymptotic(const CoefficientSpec& spec, double var_eps,
                           std::uint64_t n);
double sigma_n2_asymptotic(const CoefficientSpec& spec, double var_eps,
                           std::uint64_t n);

// (delta_n, a_n, d_{n,2}); rejects n < 16 (log log n floor).
struct RateSchedule {
    double delta_n;
    double a_n;
    double d_n2;
    int d_regime;  // 1: (p+1)(2b-1) > 1, 2: < 1
};
RateSchedule rate_schedule(const CoefficientSpec& spec, std::uint64_t n,
                           double c_delta = 1.0);

// c(beta,p) with c^2 = B(2b-1, 1-b) / ((1-b)(3-2b)); the defining integral
// int_0^inf x^-b (1+x)^-b dx equals the beta function for every p.
double lil_constant(double beta, int p = 1);
// Independent quadrature of the defining integral (singularities removed by
// power substitutions), for cross-checking the beta-function route.
double lil_integral_quadrature(double beta);

// ---------------------------------------------------------------------------

enum class LimitKind { z1_squared_scaled, z1_cubed_scaled, standard_normal };

// Exact CDF of scale * Z^2, scale * Z^3 or Z for standard normal Z; negative
// scales are handled by reflection.
struct LimitLaw {
    LimitKind kind = LimitKind::standard_normal;
    double scale = 1.0;

    bool degenerate() const;
    double cdf(double w) const;
    double median_abs() const;  // median of |W|, used by the scale gate
};

LimitLaw limit_law_squared(double scale);
LimitLaw limit_law_cubed(double scale);
LimitLaw limit_law_normal();

}  // namespace lrd
