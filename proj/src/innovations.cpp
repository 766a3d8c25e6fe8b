#include "lrd/innovations.hpp"

#include <cmath>
#include <stdexcept>

#include "lrd/special.hpp"

namespace lrd {

InnovationLaw::InnovationLaw(InnovationKind kind, double variance)
    : kind_(kind), variance_(variance) {
    if (!(variance > 0.0)) {
        throw std::domain_error("InnovationLaw: variance must be > 0");
    }
}

double InnovationLaw::fourth_moment() const {
    const double v2 = variance_ * variance_;
    switch (kind_) {
        case InnovationKind::standard_normal:
            return 3.0 * v2;
        case InnovationKind::scaled_uniform:
            return 1.8 * v2;  // E[U^4] on [-a,a] = a^4/5, a^2 = 3v
        case InnovationKind::centered_exponential_mix:
            return 6.0 * v2;  // Laplace kurtosis 6
    }
    return 3.0 * v2;
}

double InnovationLaw::quantile(double u) const {
    switch (kind_) {
        case InnovationKind::standard_normal:
            return std::sqrt(variance_) * normal_quantile(u);
        case InnovationKind::scaled_uniform: {
            const double a = std::sqrt(3.0 * variance_);
            return a * (2.0 * u - 1.0);
        }
        case InnovationKind::centered_exponential_mix: {
            // difference of two iid exponentials = Laplace(b), var = 2 b^2
            const double b = std::sqrt(0.5 * variance_);
            return (u < 0.5) ? b * std::log(2.0 * u) : -b * std::log(2.0 * (1.0 - u));
        }
    }
    return 0.0;
}

std::string InnovationLaw::name() const {
    switch (kind_) {
        case InnovationKind::standard_normal: return "standard_normal";
        case InnovationKind::scaled_uniform: return "scaled_uniform";
        case InnovationKind::centered_exponential_mix: return "centered_exponential_mix";
    }
    return "?";
}

}  // namespace lrd
