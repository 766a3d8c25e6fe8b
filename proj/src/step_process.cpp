#include "lrd/step_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrd {

namespace {
// shared ceil(n y) convention, clamped to [1, n]
std::size_t quantile_index(std::size_t n, double y, Side side) {
    double kd;
    if (side == Side::left) {
        kd = std::ceil(static_cast<double>(n) * y);
    } else {
        kd = std::floor(static_cast<double>(n) * y) + 1.0;
    }
    if (kd < 1.0) return 1;
    if (kd > static_cast<double>(n)) return n;
    return static_cast<std::size_t>(kd);
}
}  // namespace

StepProcess StepProcess::from_sample(std::vector<double> values, StepDomain domain) {
    if (values.empty()) {
        throw std::invalid_argument("StepProcess: empty sample");
    }
    std::sort(values.begin(), values.end());
    int ties = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        while (values[i] <= values[i - 1]) {
            values[i] = std::nextafter(values[i - 1], 1e308);
            ++ties;
        }
    }
    return StepProcess(std::move(values), domain, ties);
}

StepProcess::StepProcess(std::vector<double> jumps, StepDomain domain, int ties)
    : jumps_(std::move(jumps)), domain_(domain), tie_perturbations_(ties) {
    prefix_.resize(jumps_.size() + 1, 0.0);
    for (std::size_t i = 0; i < jumps_.size(); ++i)
        prefix_[i + 1] = prefix_[i] + jumps_[i];
}

std::size_t StepProcess::count_leq(double y) const {
    return static_cast<std::size_t>(
        std::upper_bound(jumps_.begin(), jumps_.end(), y) - jumps_.begin());
}

std::size_t StepProcess::count_lt(double y) const {
    return static_cast<std::size_t>(
        std::lower_bound(jumps_.begin(), jumps_.end(), y) - jumps_.begin());
}

double StepProcess::cdf(double y, Side side) const {
    const std::size_t m = (side == Side::right) ? count_leq(y) : count_lt(y);
    return static_cast<double>(m) / static_cast<double>(n());
}

double StepProcess::sample_quantile(double y, Side side) const {
    return jumps_[quantile_index(n(), y, side) - 1];
}

double StepProcess::integral_cdf(double t) const {
    if (domain_ != StepDomain::unit_interval) {
        throw std::logic_error("integral_cdf: requires unit_interval domain");
    }
    const std::size_t m = count_leq(t);
    return (static_cast<double>(m) * t - prefix_[m]) / static_cast<double>(n());
}

double StepProcess::integral_quantile(double t) const {
    if (domain_ != StepDomain::unit_interval) {
        throw std::logic_error("integral_quantile: requires unit_interval domain");
    }
    if (t <= 0.0) return 0.0;
    const std::size_t nn = n();
    const std::size_t k = quantile_index(nn, t, Side::left);
    const double nd = static_cast<double>(nn);
    return prefix_[k - 1] / nd +
           jumps_[k - 1] * (t - static_cast<double>(k - 1) / nd);
}

}  // namespace lrd
