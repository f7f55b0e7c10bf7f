#pragma once

// Cross-sectional power law between per-capita GDP and per-capita debt,
// g ~ A * d^gamma, fitted as OLS of log g on log d (g is the response).

#include <cstddef>
#include <span>
#include <vector>

#include "pubdebt/panel.hpp"

namespace pubdebt::scaling {

struct ScalingFit {
    int year = 0;
    double gamma = 0.0;
    double log_A = 0.0;  // natural log of the prefactor
    double r_squared = 0.0;
    std::size_t n_countries = 0;
    std::size_t excluded_nonpositive = 0;  // countries with d <= 0 (or g <= 0) that year
};

/// Throws Error(EmptyCrossSection) when the year is absent, Error(TooFewCountries)
/// when fewer than 3 countries have d > 0 and g > 0.
[[nodiscard]] ScalingFit fit_gdp_debt_scaling(const panel::Observations& obs, int year);

struct GammaTrend {
    std::vector<ScalingFit> fits;  // in the order of the requested years
    std::vector<int> skipped_years;
};

[[nodiscard]] GammaTrend gamma_trend(const panel::Observations& obs, std::span<const int> years);

}  // namespace pubdebt::scaling
