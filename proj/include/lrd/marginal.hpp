#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lrd {

struct LinearProcessModel;

enum class MarginalFunction { F, f, fprime, Q };

// Profile of the marginal along the quantile axis: fQ(y) = f(Q(y)) and
// friends. All callables are defined on [1e-10, 1-1e-10] and reject
// arguments outside.
struct DensityQuantileProfile {
    std::function<double(double)> fQ;             // f(Q(y))
    std::function<double(double)> fprimeQ;        // f'(Q(y))
    std::function<double(double)> fQ_prime;       // (fQ)'(y)
    std::function<double(double)> fQ_second;      // (fQ)''(y)
    std::function<double(double)> fprimeQ_prime;  // (f'Q)'(y)
    std::function<double(double)> fprimeQ_second; // (f'Q)''(y), needed by (C)
};

enum class Condition { A, B, C };

struct ConditionReport {
    Condition condition;
    double mu = 0.0;
    double grid_sup = 0.0;
    double sup_location = 0.0;
    bool bounded = false;  // false = unbounded-trend
    std::string to_json() const;
};

// Continuous marginal distribution with positive density.
class MarginalModel {
  public:
    static MarginalModel gaussian(double sigma);
    // density const*|x|^(-alpha) outside [-delta, delta], even polynomial of
    // degree 6 inside, C^2 at the seam, unit total mass.
    static MarginalModel pareto_tail(double alpha, double delta);
    // Monotone interpolation tables built from independent draws of the
    // model's own marginal.
    static MarginalModel empirical_oracle(const LinearProcessModel& model,
                                          std::uint64_t sample_size,
                                          std::uint64_t seed,
                                          bool derivative_tables = false);

    double eval(MarginalFunction which, double arg) const;
    double F(double x) const { return eval(MarginalFunction::F, x); }
    double f(double x) const { return eval(MarginalFunction::f, x); }
    double fprime(double x) const { return eval(MarginalFunction::fprime, x); }
    double Q(double y) const { return eval(MarginalFunction::Q, y); }

    DensityQuantileProfile profile() const;

    bool is_gaussian() const;
    double gaussian_sigma() const;  // throws unless gaussian
    std::string name() const;

    struct Impl;

  private:
    explicit MarginalModel(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// Refinement schedule for the weighted-sup condition checks: level l probes
// a geometric grid whose smallest distance to {0,1} is min_spacing(l).
struct RefinementSchedule {
    int levels = 8;
    double first_spacing = 1e-3;
    double last_spacing = 1e-10;
    int points_per_decade = 48;
    int interior_points = 512;
    double growth_tolerance = 0.01;  // bounded iff sup grows < 1% at the end
};

ConditionReport check_condition(const MarginalModel& model, Condition cond,
                                double mu, const RefinementSchedule& sched = {});

// mu = 0 probe of sup |(fQ)'| (no weight); reports unbounded-trend for
// gaussian-like tails.
ConditionReport check_unweighted_derivative(const MarginalModel& model,
                                            const RefinementSchedule& sched = {});

}  // namespace lrd
