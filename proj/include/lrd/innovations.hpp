#pragma once

#include <string>

namespace lrd {

enum class InnovationKind {
    standard_normal,
    scaled_uniform,
    centered_exponential_mix,  // symmetric difference of two exponentials
};

// Mean-zero innovation law with the requested variance; all kinds have finite
// fourth moment. Sampling is by inverse CDF so every draw consumes exactly
// one uniform, which keeps streams reproducible across platforms.
class InnovationLaw {
  public:
    explicit InnovationLaw(InnovationKind kind, double variance = 1.0);

    InnovationKind kind() const { return kind_; }
    double variance() const { return variance_; }
    double fourth_moment() const;

    // Quantile transform of u in (0,1).
    double quantile(double u) const;

    std::string name() const;

  private:
    InnovationKind kind_;
    double variance_;
};

}  // namespace lrd
