#pragma once

#include <cstdint>
#include <vector>

#include "lrd/coefficients.hpp"
#include "lrd/innovations.hpp"

namespace lrd {

// Truncated moving-average model X_i = sum_{k=0}^{M} c_k eps_{i-k}.
struct LinearProcessModel {
    CoefficientSpec coefficients;
    InnovationLaw innovations;

    // Var(X_i) = sum c_k^2 * Var(eps), exact for the truncated model.
    double marginal_variance() const {
        return coefficients.retained_square_mass() * innovations.variance();
    }
};

// One simulated path. innovations[0..n+M-1] correspond to indices -M..n-1,
// so x[i] = sum_k c_k * innovations[M+i-k] and the path is exactly
// stationary under the truncated model (no warm-up).
struct SamplePath {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::vector<double> innovations;  // length n + M
    std::vector<double> x;            // length n
};

struct PolynomialForms {
    double y1 = 0.0;  // sum of x
    double y2 = 0.0;  // second off-diagonal polynomial form (lags j >= 1)
};

struct SimulateOptions {
    std::size_t fft_crossover = 4096;  // direct vs FFT convolution switch
    bool force_direct = false;
    bool force_fft = false;
};

// Deterministic given (model, n, seed); thread-safe.
SamplePath simulate_path(const LinearProcessModel& model, std::uint64_t n,
                         std::uint64_t seed, const SimulateOptions& opts = {});

// Y_{n,2} = sum_i sum_{1<=j1<j2<=M} c_j1 c_j2 e_{i-j1} e_{i-j2}, computed via
//   sum_{j1<j2} = ((sum_j c_j e_{i-j})^2 - sum_j c_j^2 e_{i-j}^2) / 2
// with both inner sums over j >= 1 done by one convolution pass each.
PolynomialForms compute_y2(const SamplePath& path, const LinearProcessModel& model,
                           const SimulateOptions& opts = {});

}  // namespace lrd
