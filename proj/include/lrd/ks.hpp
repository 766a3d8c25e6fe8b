#pragma once

#include <functional>
#include <vector>

namespace lrd {

// Two-sided KS distance of a sample against a continuous CDF.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

// Exact P(D_n < d) by the Marsaglia-Tsang-Wang matrix-power method.
double ks_cdf(int n, double d);

// p-value of the two-sided statistic: P(D_n >= d).
double ks_pvalue(int n, double d);

}  // namespace lrd
