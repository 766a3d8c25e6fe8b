#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lrd {

// Slowly varying factor L0 in c_k = (k v 1)^(-beta) * L0(k).
// constant: L0(k) = c.  log_power: L0(k) = (log(k+e))^a.
struct SlowlyVarying {
    enum class Kind { constant, log_power };
    Kind kind = Kind::constant;
    double param = 1.0;  // c for constant, exponent a for log_power

    double operator()(double k) const;
    static SlowlyVarying constant(double c = 1.0);
    static SlowlyVarying log_power(double a);
};

// Moving-average coefficient specification. beta strictly inside (1/2, 1);
// truncation_m >= 1. Construction checks that the coefficient tail beyond M
// carries at most tail_eps of the retained squared mass (integral bound).
class CoefficientSpec {
  public:
    CoefficientSpec(double beta, SlowlyVarying sv, std::uint64_t truncation_m,
                    double tail_eps = 1e-4);

    double beta() const { return beta_; }
    const SlowlyVarying& slowly_varying() const { return sv_; }
    std::uint64_t truncation_m() const { return m_; }
    double tail_eps() const { return tail_eps_; }

    // c_k for 0 <= k <= M; c_0 = L0(0), c_k = k^(-beta) L0(k).
    double coefficient(std::uint64_t k) const;

    // Retained squared mass sum_{k<=M} c_k^2. Exact accumulation when M is
    // materializable, Euler-Maclaurin otherwise (constant L0 only).
    double retained_square_mass() const { return retained_sq_; }

    // Upper bound on sum_{k>M} c_k^2 via the integral bound.
    double tail_square_mass_bound() const { return tail_sq_bound_; }

    double tail_fraction() const { return tail_sq_bound_ / retained_sq_; }

    // True when M is small enough that make_coefficients can materialize the
    // array (large-M specs are still valid for analytic covariance work).
    bool materializable() const;

    std::string describe() const;

  private:
    double beta_;
    SlowlyVarying sv_;
    std::uint64_t m_;
    double tail_eps_;
    double retained_sq_ = 0.0;
    double tail_sq_bound_ = 0.0;
};

// Smallest M meeting the tail_eps coverage target. Throws if the bound
// exceeds max_m (for beta near 1/2 the required M is astronomically large).
std::uint64_t truncation_for_tolerance(double beta, const SlowlyVarying& sv,
                                       double tail_eps,
                                       std::uint64_t max_m = (1ULL << 26));

// Materialize c_0..c_M. Rejects specs whose M exceeds the materialization cap.
std::vector<double> make_coefficients(const CoefficientSpec& spec);

}  // namespace lrd
