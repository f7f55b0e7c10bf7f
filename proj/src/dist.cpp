#include "pubdebt/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "pubdebt/error.hpp"
#include "pubdebt/regress.hpp"
#include "pubdebt/special.hpp"

namespace pubdebt::dist {

namespace {

void check_histogram_samples(std::span<const double> samples) {
    if (samples.empty()) throw Error(ErrorKind::EmptySample, "histogram of an empty sample");
    for (double x : samples) {
        if (!std::isfinite(x)) throw Error(ErrorKind::NonFiniteValue, "histogram sample is not finite");
        if (x < 0.0) throw Error(ErrorKind::NonPositive, "histogram samples must be >= 0");
    }
}

void finish_density(HistogramPdf& h) {
    if (h.n == 0) throw Error(ErrorKind::EmptySample, "no sample falls inside the histogram edges");
    h.density.resize(h.counts.size());
    const double total = static_cast<double>(h.n);
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        const double width = h.edges[i + 1] - h.edges[i];
        h.density[i] = static_cast<double>(h.counts[i]) / (total * width);
    }
}

}  // namespace

HistogramPdf histogram_pdf(std::span<const double> samples, std::size_t bins) {
    check_histogram_samples(samples);
    if (bins == 0) throw Error(ErrorKind::InvalidParameter, "bins must be >= 1");
    double hi = *std::max_element(samples.begin(), samples.end());
    if (hi <= 0.0) hi = 1.0;

    HistogramPdf h;
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.edges[i] = hi * static_cast<double>(i) / static_cast<double>(bins);
    }
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    const double width = hi / static_cast<double>(bins);
    for (double x : samples) {
        auto idx = static_cast<std::size_t>(x / width);
        idx = std::min(idx, bins - 1);
        // Guard against x / width rounding across an edge.
        while (idx > 0 && x < h.edges[idx]) --idx;
        while (idx + 1 < bins && x >= h.edges[idx + 1]) ++idx;
        ++h.counts[idx];
    }
    h.n = samples.size();
    finish_density(h);
    return h;
}

HistogramPdf histogram_pdf(std::span<const double> samples, std::span<const double> edges) {
    check_histogram_samples(samples);
    if (edges.size() < 2) throw Error(ErrorKind::InvalidParameter, "need at least two edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1])) {
            throw Error(ErrorKind::InvalidParameter, "edges must be strictly ascending");
        }
    }
    HistogramPdf h;
    h.edges.assign(edges.begin(), edges.end());
    h.counts.assign(edges.size() - 1, 0);
    for (double x : samples) {
        if (x < edges.front() || x > edges.back()) {
            ++h.outside;
            continue;
        }
        auto it = std::upper_bound(edges.begin(), edges.end(), x);
        auto idx = static_cast<std::size_t>(std::distance(edges.begin(), it));
        idx = std::min(idx, edges.size() - 1) - 1;
        ++h.counts[idx];
        ++h.n;
    }
    finish_density(h);
    return h;
}

// ---------------------------------------------------------------------------

double gamma_log_likelihood(std::span<const double> samples, double k, double r_c) {
    double sum_log = 0.0;
    double sum = 0.0;
    for (double x : samples) {
        sum_log += std::log(x);
        sum += x;
    }
    const double n = static_cast<double>(samples.size());
    return (k - 1.0) * sum_log - sum / r_c - n * k * std::log(r_c) - n * std::lgamma(k);
}

double gamma_density(double x, double k, double r_c) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return k < 1.0 ? INFINITY : (k == 1.0 ? 1.0 / r_c : 0.0);
    return std::exp((k - 1.0) * std::log(x) - x / r_c - k * std::log(r_c) - std::lgamma(k));
}

GammaFit fit_gamma_mle(std::span<const double> samples, GammaFitOptions options) {
    const std::size_t n = samples.size();
    if (n < std::max<std::size_t>(options.min_samples, 2)) {
        throw Error(ErrorKind::TooFewPoints,
                    fmt::format("Gamma MLE needs at least {} samples, got {}",
                                std::max<std::size_t>(options.min_samples, 2), n));
    }
    double sum = 0.0;
    double sum_log = 0.0;
    for (double x : samples) {
        if (!std::isfinite(x) || !(x > 0.0)) {
            throw Error(ErrorKind::NonPositiveSample, "Gamma MLE needs strictly positive samples");
        }
        sum += x;
        sum_log += std::log(x);
    }
    const double nd = static_cast<double>(n);
    const double mean = sum / nd;
    double var = 0.0;
    for (double x : samples) var += (x - mean) * (x - mean);
    var /= nd;

    // s > 0 by Jensen's inequality unless every sample is equal.
    const double s = std::log(mean) - sum_log / nd;
    if (!(var > 0.0) || !(s > 0.0)) {
        throw Error(ErrorKind::DegenerateSample, "zero-variance sample, shape diverges");
    }

    double k = mean * mean / var;
    GammaFit fit;
    bool converged = false;
    for (int it = 1; it <= options.max_iterations; ++it) {
        const double f = std::log(k) - special::digamma(k) - s;
        const double df = 1.0 / k - special::trigamma(k);
        double next = k - f / df;
        if (!(next > 0.0)) next = 0.5 * k;
        const double step = std::abs(next - k);
        k = next;
        fit.iterations = it;
        if (step < options.relative_tolerance * k) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorKind::NoConvergence,
                    fmt::format("Newton iteration for shape did not converge in {} steps; last k = {}",
                                options.max_iterations, k));
    }
    fit.k = k;
    fit.r_c = mean / k;
    fit.n = n;
    fit.log_likelihood = gamma_log_likelihood(samples, fit.k, fit.r_c);
    return fit;
}

double gamma_tail_probability(const GammaFit& fit, double threshold) {
    if (threshold <= 0.0) return 1.0;
    return special::gamma_q(fit.k, threshold / fit.r_c);
}

// ---------------------------------------------------------------------------

std::vector<RankedValue> zipf_ranks(std::span<const double> samples) {
    if (samples.empty()) throw Error(ErrorKind::EmptySample, "Zipf ranks of an empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<RankedValue> out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) out[i] = {i + 1, sorted[i]};
    return out;
}

ZipfFit fit_zipf_exponent(std::span<const RankedValue> ranked, RankWindow window) {
    if (window.lo < 1 || window.hi < window.lo) {
        throw Error(ErrorKind::WindowTooSmall,
                    fmt::format("invalid rank window [{}, {}]", window.lo, window.hi));
    }
    std::vector<double> log_rank;
    std::vector<double> log_value;
    for (const auto& rv : ranked) {
        if (rv.rank < window.lo || rv.rank > window.hi) continue;
        if (!(rv.value > 0.0)) {
            throw Error(ErrorKind::NonPositiveInWindow,
                        fmt::format("rank {} has non-positive value {}", rv.rank, rv.value));
        }
        log_rank.push_back(std::log(static_cast<double>(rv.rank)));
        log_value.push_back(std::log(rv.value));
    }
    if (log_rank.size() < 3) {
        throw Error(ErrorKind::WindowTooSmall,
                    fmt::format("rank window [{}, {}] holds {} ranks, need 3", window.lo, window.hi,
                                log_rank.size()));
    }
    const auto ls = regress::ols(log_rank, log_value);
    ZipfFit fit;
    fit.zeta = -ls.slope;
    if (!(fit.zeta > 0.0)) {
        throw Error(ErrorKind::DegenerateSample, "rank-frequency slope is not negative");
    }
    fit.rank_window = window;
    fit.r_squared = ls.r_squared;
    fit.implied_pdf_exponent = 1.0 + 1.0 / fit.zeta;
    fit.n = ls.n;
    return fit;
}

SummaryStats summary_stats(std::span<const double> samples) {
    if (samples.size() < 2) throw Error(ErrorKind::TooFewPoints, "summary needs at least 2 samples");
    const double n = static_cast<double>(samples.size());
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / n), samples.size()};
}

std::pair<std::vector<double>, std::size_t> positive_only(std::span<const double> samples) {
    std::vector<double> kept;
    kept.reserve(samples.size());
    for (double x : samples) {
        if (x > 0.0) kept.push_back(x);
    }
    return {std::move(kept), samples.size() - kept.size()};
}

}  // namespace pubdebt::dist
