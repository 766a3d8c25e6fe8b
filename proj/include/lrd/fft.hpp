#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lrd {

// Iterative radix-2 FFT, in place; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

std::size_t next_pow2(std::size_t n);

// Linear convolution of real sequences (result length |a|+|b|-1).
std::vector<double> convolve_direct(const std::vector<double>& a,
                                    const std::vector<double>& b);
std::vector<double> convolve_fft(const std::vector<double>& a,
                                 const std::vector<double>& b);

// Dispatches on total length against the crossover threshold.
std::vector<double> convolve(const std::vector<double>& a,
                             const std::vector<double>& b,
                             std::size_t fft_crossover = 4096);

// Precomputed spectrum of a fixed kernel, for convolving many signals of a
// known maximum length against the same coefficients.
class KernelConvolver {
  public:
    KernelConvolver(const std::vector<double>& kernel, std::size_t max_signal_len);

    // y[i] = sum_k kernel[k] * x[i-k]; returns length |x|+|kernel|-1.
    std::vector<double> apply(const std::vector<double>& x) const;

    std::size_t fft_size() const { return size_; }

  private:
    std::size_t kernel_len_;
    std::size_t size_;
    std::vector<std::complex<double>> kernel_spec_;
};

// Lag-autocorrelation r[k] = sum_l a[l] a[l+k], k = 0..max_lag, via one FFT.
std::vector<double> autocorrelation_fft(const std::vector<double>& a,
                                        std::size_t max_lag);
std::vector<double> autocorrelation_direct(const std::vector<double>& a,
                                           std::size_t max_lag);

}  // namespace lrd
