#include "lrd/special.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kSqrt2 = 1.4142135623730950488016887;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must be in (0,1)");
    }
    // AS 241, PPND16
    const double q = p - 0.5;
    double r;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

double chi_squared1_cdf(double x) {
    if (x <= 0.0) return 0.0;
    return std::erf(std::sqrt(0.5 * x));
}

double beta_function(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double riemann_zeta(double s) {
    if (s <= 0.0 || s == 1.0) {
        throw std::domain_error("riemann_zeta: requires s > 0, s != 1");
    }
    const int L = 2000;
    double sum = 0.0;
    for (int l = 1; l <= L; ++l) sum += std::pow(static_cast<double>(l), -s);
    const double Ld = static_cast<double>(L);
    sum += std::pow(Ld, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(Ld, -s);
    sum -= s * std::pow(Ld, -s - 1.0) / 12.0;
    sum += s * (s + 1.0) * (s + 2.0) * std::pow(Ld, -s - 3.0) / 720.0;
    return sum;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double power_prefix_sum(double j, double s) {
    if (j < 0.5) return 0.0;
    const long long ji = static_cast<long long>(j + 0.5);
    if (ji <= 4096) {
        double sum = 0.0;
        for (long long l = 1; l <= ji; ++l)
            sum += std::pow(static_cast<double>(l), -s);
        return sum;
    }
    return riemann_zeta(s) + std::pow(j, 1.0 - s) / (1.0 - s) +
           0.5 * std::pow(j, -s) - s * std::pow(j, -s - 1.0) / 12.0 +
           s * (s + 1.0) * (s + 2.0) * std::pow(j, -s - 3.0) / 720.0;
}

double power_window_sum(double s, double n, double beta) {
    if (s < 0.5) return power_prefix_sum(n, beta);
    if (s <= 1e6 && n <= 4096) {
        double sum = 0.0;
        const long long si = static_cast<long long>(s + 0.5);
        const long long ni = static_cast<long long>(n + 0.5);
        for (long long l = si + 1; l <= si + ni; ++l)
            sum += std::pow(static_cast<double>(l), -beta);
        return sum;
    }
    // Difference of the Euler-Maclaurin expansions, each term evaluated as a
    // stable difference: (s+n)^p - s^p = s^p * expm1(p*log1p(n/s)).
    auto pow_diff = [&](double p) {
        return std::pow(s, p) * std::expm1(p * std::log1p(n / s));
    };
    double sum = pow_diff(1.0 - beta) / (1.0 - beta);
    sum += 0.5 * pow_diff(-beta);
    sum -= beta * pow_diff(-beta - 1.0) / 12.0;
    sum += beta * (beta + 1.0) * (beta + 2.0) * pow_diff(-beta - 3.0) / 720.0;
    return sum;
}

}  // namespace lrd
