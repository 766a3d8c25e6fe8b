#include "lrd/coefficients.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lrd/special.hpp"

namespace lrd {

namespace {
constexpr std::uint64_t kMaterializeCap = 1ULL << 26;

double tail_integral_bound(double beta, const SlowlyVarying& sv, double m) {
    // sum_{k>M} k^(-2b) L0^2(k) <= integral_M^inf x^(-2b) L0^2(x) dx
    // (integrand decreasing for every supported L0 beyond small k).
    if (sv.kind == SlowlyVarying::Kind::constant) {
        const double c = sv.param;
        return c * c * std::pow(m, 1.0 - 2.0 * beta) / (2.0 * beta - 1.0);
    }
    // log_power: substitute x = M e^w; integral = M^(1-2b) *
    // int_0^inf e^{-(2b-1)w} (log(M e^w + e))^{2a} dw, evaluated by mapping
    // w = -log(1-t)/(2b-1) onto (0,1).
    const double a = sv.param;
    const double r = 2.0 * beta - 1.0;
    auto f = [&](double t) {
        if (t >= 1.0) return 0.0;
        const double w = -std::log1p(-t) / r;
        const double lg = std::log(m) + w + std::log1p(std::exp(-std::log(m) - w) * M_E);
        return std::pow(lg, 2.0 * a) / r;
    };
    const double integral = adaptive_simpson(f, 0.0, 1.0 - 1e-12, 1e-12);
    return std::pow(m, 1.0 - 2.0 * beta) * integral;
}
}  // namespace

double SlowlyVarying::operator()(double k) const {
    switch (kind) {
        case Kind::constant:
            return param;
        case Kind::log_power:
            return std::pow(std::log(k + M_E), param);
    }
    return param;
}

SlowlyVarying SlowlyVarying::constant(double c) {
    if (!(c > 0.0)) throw std::domain_error("SlowlyVarying: constant must be > 0");
    return SlowlyVarying{Kind::constant, c};
}

SlowlyVarying SlowlyVarying::log_power(double a) {
    return SlowlyVarying{Kind::log_power, a};
}

CoefficientSpec::CoefficientSpec(double beta, SlowlyVarying sv,
                                 std::uint64_t truncation_m, double tail_eps)
    : beta_(beta), sv_(sv), m_(truncation_m), tail_eps_(tail_eps) {
    if (!(beta > 0.5 && beta < 1.0)) {
        throw std::domain_error("CoefficientSpec: beta outside (0.5,1)");
    }
    if (m_ < 1) throw std::domain_error("CoefficientSpec: truncation_m < 1");
    if (!(tail_eps_ > 0.0)) throw std::domain_error("CoefficientSpec: tail_eps <= 0");

    const double md = static_cast<double>(m_);
    if (materializable()) {
        double sq = 0.0;
        for (std::uint64_t k = 0; k <= m_; ++k) {
            const double c = coefficient(k);
            sq += c * c;
        }
        retained_sq_ = sq;
    } else {
        if (sv_.kind != SlowlyVarying::Kind::constant) {
            throw std::domain_error(
                "CoefficientSpec: large-M specs require constant L0");
        }
        const double c0 = coefficient(0);
        const double c = sv_.param;
        // sum_{k=1..M} k^{-2beta}, Euler-Maclaurin
        retained_sq_ = c0 * c0 + c * c * power_prefix_sum(md, 2.0 * beta_);
    }
    tail_sq_bound_ = tail_integral_bound(beta_, sv_, md);
    if (tail_sq_bound_ > tail_eps_ * retained_sq_) {
        std::ostringstream os;
        os << "CoefficientSpec: tail variance fraction "
           << tail_sq_bound_ / retained_sq_ << " exceeds tail_eps " << tail_eps_
           << " at M=" << m_;
        throw std::domain_error(os.str());
    }
}

double CoefficientSpec::coefficient(std::uint64_t k) const {
    if (k == 0) return sv_(0.0);
    const double kd = static_cast<double>(k);
    return std::pow(kd, -beta_) * sv_(kd);
}

bool CoefficientSpec::materializable() const { return m_ <= kMaterializeCap; }

std::string CoefficientSpec::describe() const {
    std::ostringstream os;
    os << "beta=" << beta_ << " M=" << m_ << " L0=";
    if (sv_.kind == SlowlyVarying::Kind::constant)
        os << "const(" << sv_.param << ")";
    else
        os << "logpow(" << sv_.param << ")";
    return os.str();
}

std::uint64_t truncation_for_tolerance(double beta, const SlowlyVarying& sv,
                                       double tail_eps, std::uint64_t max_m) {
    if (!(beta > 0.5 && beta < 1.0)) {
        throw std::domain_error("truncation_for_tolerance: beta outside (0.5,1)");
    }
    // Bisect on log M: tail fraction is decreasing in M.
    auto fraction = [&](double m) {
        double retained = sv(0.0) * sv(0.0);
        const std::uint64_t head = std::min<std::uint64_t>(4096, static_cast<std::uint64_t>(m));
        for (std::uint64_t k = 1; k <= head; ++k) {
            const double c = std::pow(static_cast<double>(k), -beta) *
                             sv(static_cast<double>(k));
            retained += c * c;
        }
        return tail_integral_bound(beta, sv, m) / retained;
    };
    std::uint64_t lo = 1, hi = max_m;
    if (fraction(static_cast<double>(hi)) > tail_eps) {
        std::ostringstream os;
        os << "truncation_for_tolerance: tail_eps=" << tail_eps
           << " needs M beyond cap " << max_m << " at beta=" << beta;
        throw std::domain_error(os.str());
    }
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (fraction(static_cast<double>(mid)) > tail_eps)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

std::vector<double> make_coefficients(const CoefficientSpec& spec) {
    if (!spec.materializable()) {
        throw std::domain_error("make_coefficients: truncation_m too large to materialize");
    }
    std::vector<double> c(spec.truncation_m() + 1);
    for (std::uint64_t k = 0; k < c.size(); ++k) c[k] = spec.coefficient(k);
    return c;
}

}  // namespace lrd
