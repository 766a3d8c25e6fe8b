#include "lrd/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace lrd {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft_inplace: size must be a power of two");
    }
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv;
    }
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<double> convolve_direct(const std::vector<double>& a,
                                    const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += ai * b[j];
    }
    return out;
}

std::vector<double> convolve_fft(const std::vector<double>& a,
                                 const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t size = next_pow2(out_len);
    std::vector<std::complex<double>> fa(size), fb(size);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    fft_inplace(fa, false);
    fft_inplace(fb, false);
    for (std::size_t i = 0; i < size; ++i) fa[i] *= fb[i];
    fft_inplace(fa, true);
    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
    return out;
}

std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b,
                             std::size_t fft_crossover) {
    if (a.size() + b.size() <= fft_crossover) return convolve_direct(a, b);
    return convolve_fft(a, b);
}

KernelConvolver::KernelConvolver(const std::vector<double>& kernel,
                                 std::size_t max_signal_len)
    : kernel_len_(kernel.size()),
      size_(next_pow2(kernel.size() + max_signal_len)) {
    kernel_spec_.assign(size_, {0.0, 0.0});
    for (std::size_t i = 0; i < kernel.size(); ++i) kernel_spec_[i] = kernel[i];
    fft_inplace(kernel_spec_, false);
}

std::vector<double> KernelConvolver::apply(const std::vector<double>& x) const {
    const std::size_t out_len = x.size() + kernel_len_ - 1;
    if (next_pow2(out_len) > size_) {
        throw std::invalid_argument("KernelConvolver: signal longer than planned");
    }
    std::vector<std::complex<double>> fx(size_, {0.0, 0.0});
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
    fft_inplace(fx, false);
    for (std::size_t i = 0; i < size_; ++i) fx[i] *= kernel_spec_[i];
    fft_inplace(fx, true);
    std::vector<double> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = fx[i].real();
    return out;
}

std::vector<double> autocorrelation_fft(const std::vector<double>& a,
                                        std::size_t max_lag) {
    const std::size_t size = next_pow2(a.size() + max_lag + 1);
    std::vector<std::complex<double>> fa(size, {0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    fft_inplace(fa, false);
    for (auto& z : fa) z = z * std::conj(z);
    fft_inplace(fa, true);
    std::vector<double> out(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= max_lag; ++k) out[k] = fa[k].real();
    return out;
}

std::vector<double> autocorrelation_direct(const std::vector<double>& a,
                                           std::size_t max_lag) {
    std::vector<double> out(max_lag + 1, 0.0);
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t l = 0; l + k < a.size(); ++l) s += a[l] * a[l + k];
        out[k] = s;
    }
    return out;
}

}  // namespace lrd
