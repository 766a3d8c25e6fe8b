#include "lrd/model.hpp"

#include <stdexcept>

#include "lrd/fft.hpp"
#include "lrd/rng.hpp"

namespace lrd {

namespace {

std::vector<double> convolve_with(const std::vector<double>& kernel,
                                  const std::vector<double>& signal,
                                  const SimulateOptions& opts) {
    if (opts.force_direct) return convolve_direct(kernel, signal);
    if (opts.force_fft) return convolve_fft(kernel, signal);
    return convolve(kernel, signal, opts.fft_crossover);
}

}  // namespace

SamplePath simulate_path(const LinearProcessModel& model, std::uint64_t n,
                         std::uint64_t seed, const SimulateOptions& opts) {
    if (n < 1) throw std::domain_error("simulate_path: n must be >= 1");
    const std::uint64_t m = model.coefficients.truncation_m();
    const std::vector<double> c = make_coefficients(model.coefficients);

    SamplePath path;
    path.n = n;
    path.seed = seed;
    path.innovations.resize(n + m);
    UniformSource rng(seed);
    for (auto& e : path.innovations) e = model.innovations.quantile(rng.next());

    // full convolution index M+i picks up exactly c_0..c_M against
    // innovations (i-M..i in path indexing)
    const std::vector<double> full = convolve_with(c, path.innovations, opts);
    path.x.assign(full.begin() + static_cast<std::ptrdiff_t>(m),
                  full.begin() + static_cast<std::ptrdiff_t>(m + n));
    return path;
}

PolynomialForms compute_y2(const SamplePath& path, const LinearProcessModel& model,
                           const SimulateOptions& opts) {
    const std::uint64_t m = model.coefficients.truncation_m();
    if (path.innovations.size() != path.n + m) {
        throw std::invalid_argument("compute_y2: path does not match model truncation");
    }
    PolynomialForms out;
    for (double v : path.x) out.y1 += v;

    // s_i = sum_{j>=1} c_j e_{i-j} = x_i - c_0 e_i
    const double c0 = model.coefficients.coefficient(0);
    std::vector<double> c2(m + 1);
    c2[0] = 0.0;
    for (std::uint64_t k = 1; k <= m; ++k) {
        const double ck = model.coefficients.coefficient(k);
        c2[k] = ck * ck;
    }
    std::vector<double> eps2(path.innovations.size());
    for (std::size_t i = 0; i < eps2.size(); ++i)
        eps2[i] = path.innovations[i] * path.innovations[i];
    const std::vector<double> q_full = convolve_with(c2, eps2, opts);

    double acc = 0.0;
    for (std::uint64_t i = 0; i < path.n; ++i) {
        const double s = path.x[i] - c0 * path.innovations[m + i];
        const double q = q_full[m + i];
        acc += s * s - q;
    }
    out.y2 = 0.5 * acc;
    return out;
}

}  // namespace lrd
