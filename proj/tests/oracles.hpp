#pragma once

#include <cmath>
#include <vector>

namespace testing {

/// Profile log-likelihood of the Gamma shape: for fixed k the scale optimum is mean / k.
inline double profile_loglik(const std::vector<double>& x, double k) {
    double sum = 0.0, sum_log = 0.0;
    for (double v : x) {
        sum += v;
        sum_log += std::log(v);
    }
    const double n = static_cast<double>(x.size());
    const double scale = sum / n / k;
    return (k - 1.0) * sum_log - sum / scale - n * k * std::log(scale) - n * std::lgamma(k);
}

/// Brute-force shape search over k in [1e-4, 200] with step 1e-4.
inline double grid_shape(const std::vector<double>& x) {
    double best_k = 1e-4, best = -INFINITY;
    for (int i = 1; i <= 2000000; ++i) {
        const double k = 1e-4 * i;
        const double ll = profile_loglik(x, k);
        if (ll > best) {
            best = ll;
            best_k = k;
        }
    }
    return best_k;
}

/// Small fixed samples for the grid comparison.
inline std::vector<std::vector<double>> small_gamma_samples() {
    return {
        {0.1, 0.2, 0.4, 0.8, 1.0},
        {0.05, 0.3, 0.31, 0.9, 2.5, 0.7},
        {1.0, 1.1, 1.2, 0.9, 0.95},
        {3.0, 0.01, 0.5, 0.2},
        {0.57, 0.12, 1.9, 0.33, 0.41, 0.88, 0.25},
    };
}

}  // namespace testing
