#include "lrd/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lrd {

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
    if (sample.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double g = cdf(sample[i]);
        const double hi = (static_cast<double>(i) + 1.0) / n - g;
        const double lo = g - static_cast<double>(i) / n;
        d = std::max({d, hi, lo});
    }
    return d;
}

namespace {

// H^n (t,t) entry per Marsaglia, Tsang, Wang (2003), with power-of-2
// exponentiation and magnitude rescaling.
struct ScaledMatrix {
    int m;
    std::vector<double> a;  // m*m
    int exponent;           // value = a * 10^exponent elementwise bookkeeping

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
};

ScaledMatrix multiply(const ScaledMatrix& x, const ScaledMatrix& y) {
    const int m = x.m;
    ScaledMatrix z{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0),
                   x.exponent + y.exponent};
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            const double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < m; ++j) z.at(i, j) += v * y.at(k, j);
        }
    }
    const double center = z.at(m / 2, m / 2);
    if (center > 1e140) {
        for (auto& v : z.a) v *= 1e-140;
        z.exponent += 140;
    }
    return z;
}

}  // namespace

double ks_cdf(int n, double d) {
    if (n < 1) throw std::domain_error("ks_cdf: n must be >= 1");
    if (d <= 0.0) return 0.0;
    if (d >= 1.0) return 1.0;
    const double nd = static_cast<double>(n) * d;
    const int k = static_cast<int>(std::ceil(nd));
    const double h = static_cast<double>(k) - nd;
    const int m = 2 * k - 1;

    ScaledMatrix H{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0), 0};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i - j + 1 >= 0) H.at(i, j) = 1.0;
        }
    }
    for (int i = 0; i < m; ++i) {
        H.at(i, 0) -= std::pow(h, i + 1);
        H.at(m - 1, i) -= std::pow(h, m - i);
    }
    H.at(m - 1, 0) += (2.0 * h - 1.0 > 0.0) ? std::pow(2.0 * h - 1.0, m) : 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i - j + 1 > 0) {
                for (int g = 1; g <= i - j + 1; ++g) H.at(i, j) /= g;
            }
        }
    }

    // H^n by binary exponentiation
    ScaledMatrix result{m, std::vector<double>(static_cast<std::size_t>(m) * m, 0.0), 0};
    for (int i = 0; i < m; ++i) result.at(i, i) = 1.0;
    ScaledMatrix base = H;
    int e = n;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }

    double p = result.at(k - 1, k - 1);
    int exponent = result.exponent;
    for (int i = 1; i <= n; ++i) {
        p *= static_cast<double>(i) / static_cast<double>(n);
        if (p < 1e-140) {
            p *= 1e140;
            exponent -= 140;
        }
    }
    return p * std::pow(10.0, exponent);
}

double ks_pvalue(int n, double d) {
    const double c = ks_cdf(n, d);
    return std::min(1.0, std::max(0.0, 1.0 - c));
}

}  // namespace lrd
