#pragma once

// Distributional analysis of pooled samples (per-capita debt d, ratio R):
// histogram densities, Gamma maximum likelihood, and Zipf rank-frequency fits.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pubdebt::dist {

struct HistogramPdf {
    std::vector<double> edges;          // ascending, size = bins + 1
    std::vector<double> density;        // per bin
    std::vector<std::size_t> counts;    // per bin
    std::size_t n = 0;                  // samples falling inside [edges.front(), edges.back()]
    std::size_t outside = 0;            // samples outside the edge range (explicit edges only)

    [[nodiscard]] std::size_t bins() const noexcept { return density.size(); }
};

inline constexpr std::size_t kDefaultBins = 50;

/// Equal-width bins over [0, max(samples)]; the last bin is closed on the right.
/// Throws Error(EmptySample) / Error(NonFiniteValue) / Error(NonPositive) for negative samples.
[[nodiscard]] HistogramPdf histogram_pdf(std::span<const double> samples,
                                         std::size_t bins = kDefaultBins);

/// Explicit ascending edges. Bins are [e_i, e_{i+1}) except the last, which is closed.
/// Samples outside the range are counted in `outside` and excluded from normalization.
[[nodiscard]] HistogramPdf histogram_pdf(std::span<const double> samples,
                                         std::span<const double> edges);

struct GammaFit {
    double k = 0.0;    // shape
    double r_c = 0.0;  // scale
    double log_likelihood = 0.0;
    std::size_t n = 0;
    int iterations = 0;
};

struct GammaFitOptions {
    std::size_t min_samples = 10;
    double relative_tolerance = 1e-10;
    int max_iterations = 100;
};

/// Two-parameter Gamma MLE, density x^{k-1} exp(-x / r_c) / (Gamma(k) r_c^k).
/// Newton-Raphson on log k - psi(k) = log(mean) - mean(log x), started from the
/// moment estimate mean^2 / variance; r_c = mean / k.
/// Errors: TooFewPoints, NonPositiveSample, DegenerateSample (zero variance),
/// NoConvergence (message carries the last iterate).
[[nodiscard]] GammaFit fit_gamma_mle(std::span<const double> samples, GammaFitOptions options = {});

/// log-likelihood of samples under Gamma(k, r_c).
[[nodiscard]] double gamma_log_likelihood(std::span<const double> samples, double k, double r_c);

/// P(X > threshold) under the fitted Gamma.
[[nodiscard]] double gamma_tail_probability(const GammaFit& fit, double threshold);

[[nodiscard]] double gamma_density(double x, double k, double r_c);

struct RankedValue {
    std::size_t rank = 0;
    double value = 0.0;

    friend bool operator==(const RankedValue&, const RankedValue&) = default;
};

/// Values sorted descending, ranks from 1; ties keep input order.
[[nodiscard]] std::vector<RankedValue> zipf_ranks(std::span<const double> samples);

struct RankWindow {
    std::size_t lo = 1;
    std::size_t hi = 0;  // inclusive
};

struct ZipfFit {
    double zeta = 0.0;
    RankWindow rank_window;
    double r_squared = 0.0;
    double implied_pdf_exponent = 0.0;  // 1 + 1 / zeta
    std::size_t n = 0;
};

/// OLS of log value on log rank over the inclusive rank window.
/// Errors: WindowTooSmall (< 3 ranks), NonPositiveInWindow, DegenerateSample when
/// the fitted slope is not negative (zeta must be > 0).
[[nodiscard]] ZipfFit fit_zipf_exponent(std::span<const RankedValue> ranked, RankWindow window);

struct SummaryStats {
    double mean = 0.0;
    double std = 0.0;  // population standard deviation
    std::size_t n = 0;
};

/// Throws Error(TooFewPoints) for n < 2.
[[nodiscard]] SummaryStats summary_stats(std::span<const double> samples);

/// Strictly positive entries and the number removed.
[[nodiscard]] std::pair<std::vector<double>, std::size_t> positive_only(std::span<const double> samples);

}  // namespace pubdebt::dist
