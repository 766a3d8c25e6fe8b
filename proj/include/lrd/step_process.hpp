#pragma once

#include <cstddef>
#include <vector>

namespace lrd {

enum class StepDomain { real_line, unit_interval };

enum class Side { left, right };

// Sorted-jump representation of the empirical distribution function and the
// sample quantile function of one sample. Distribution evaluation is
// right-continuous, quantile evaluation left-continuous; y = 0 maps to the
// first order statistic. Prefix sums make integrals over [0,t] exact, which
// is what keeps the downstream functionals free of quadrature error.
class StepProcess {
  public:
    static StepProcess from_sample(std::vector<double> values, StepDomain domain);

    std::size_t n() const { return jumps_.size(); }
    StepDomain domain() const { return domain_; }
    const std::vector<double>& jump_points() const { return jumps_; }

    // order statistic, 1-based
    double order_stat(std::size_t i) const { return jumps_.at(i - 1); }

    std::size_t count_leq(double y) const;
    std::size_t count_lt(double y) const;

    // F_n(y) (or E_n for uniform samples)
    double cdf(double y, Side side = Side::right) const;

    // x_{ceil(n y)} with the left-continuous convention
    double sample_quantile(double y, Side side = Side::left) const;

    // integral_0^t cdf = (1/n) sum_i (t - x_i)^+   [unit_interval only]
    double integral_cdf(double t) const;

    // integral_0^t sample_quantile(y) dy            [unit_interval only]
    double integral_quantile(double t) const;

    // number of exact duplicates separated by one ulp at construction
    int tie_perturbations() const { return tie_perturbations_; }

  private:
    StepProcess(std::vector<double> jumps, StepDomain domain, int ties);

    std::vector<double> jumps_;    // strictly increasing
    std::vector<double> prefix_;   // prefix_[i] = sum of first i jumps
    StepDomain domain_;
    int tie_perturbations_ = 0;
};

}  // namespace lrd
