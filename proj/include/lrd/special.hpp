#pragma once

#include <functional>

namespace lrd {

// Standard normal density, distribution function and quantile.
double normal_pdf(double x);
double normal_cdf(double x);

// Wichura's AS 241 (PPND16) inverse normal; relative error below 1e-15 on
// (0,1). Throws std::domain_error outside (0,1).
double normal_quantile(double p);

// P(chi^2_1 <= x)
double chi_squared1_cdf(double x);

// Complete beta function B(a,b) for a,b > 0, via lgamma.
double beta_function(double a, double b);

// Riemann zeta for s > 0, s != 1 (Euler-Maclaurin continuation below 1).
double riemann_zeta(double s);

// Adaptive Simpson on [a,b]; tol is absolute. Recursion depth is capped, so
// integrands should be smooth (apply substitutions before calling).
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

// sum_{l=1}^{j} l^{-s} for 0 < s < 1, exact accumulation for small j and
// Euler-Maclaurin beyond.
double power_prefix_sum(double j, double s);

// sum_{l=s+1}^{s+n} l^{-beta}, stable for s >> n (avoids cancellation of two
// large prefix sums).
double power_window_sum(double s, double n, double beta);

}  // namespace lrd
