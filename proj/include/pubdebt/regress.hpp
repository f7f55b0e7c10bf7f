#pragma once

// Least squares and cross-country convergence regressions.
//
// For a variable v (per-capita debt, per-capita GDP or debt-to-GDP ratio) the
// convergence regression fits
//
//     log v_i(t + dt) = alpha * dt + S * log v_i(t),     S = 1 - beta * dt,
//
// across countries i. beta > 0 means initially smaller values grow faster
// (convergence); beta < 0 means divergence. All logarithms are natural.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pubdebt/panel.hpp"

namespace pubdebt::regress {

inline constexpr std::string_view kLogBase = "natural";

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
    /// Set when the response has zero variance; r_squared is then defined as 0.
    bool flat_response = false;
};

/// Plain unweighted least squares of y on x via mean-centered normal equations.
/// Throws Error(TooFewPoints) for n < 3 or unequal lengths, Error(DegenerateX)
/// when x has zero variance.
[[nodiscard]] OlsFit ols(std::span<const double> x, std::span<const double> y);

/// Annualized natural-log growth rate log(v_end / v_start) / dt.
/// Throws Error(NonPositiveValue) for non-positive values, Error(InvalidParameter) for dt < 1.
[[nodiscard]] double growth_rate(double v_start, double v_end, int dt);

enum class Variable { debt_per_capita, gdp_per_capita, ratio_R };

[[nodiscard]] panel::Field field_of(Variable variable) noexcept;
/// Short tag used in file names and CSV output: "d", "g" or "R".
[[nodiscard]] std::string_view tag(Variable variable) noexcept;

struct ConvergenceFit {
    Variable variable = Variable::debt_per_capita;
    int t = 0;
    int dt = 0;
    double S = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double r_squared = 0.0;
    std::size_t n_countries = 0;
    /// Countries observed at t or t + dt but lacking the other endpoint.
    std::size_t excluded_missing = 0;
    /// Countries with both endpoints where either value is <= 0.
    std::size_t excluded_nonpositive = 0;

    [[nodiscard]] bool converging() const noexcept { return beta > 0.0; }
    [[nodiscard]] bool diverging() const noexcept { return beta < 0.0; }
};

/// Throws Error(EmptyCrossSection) if either year is absent from the panel and
/// Error(TooFewCountries) when fewer than 3 countries have positive values at
/// both endpoints.
[[nodiscard]] ConvergenceFit convergence_regression(const panel::Observations& obs, Variable variable,
                                                    int t, int dt);

struct SlopeSurface {
    Variable variable = Variable::debt_per_capita;
    double r2_min = 0.0;
    std::vector<ConvergenceFit> entries;  // grid order: t ascending in t_list order, then dt
    std::size_t dropped_low_r2 = 0;
    std::size_t skipped_insufficient = 0;
};

/// One fit per (t, dt) with t in t_list and 1 <= dt <= dt_max. Cells without
/// enough data are skipped, cells with r_squared < r2_min dropped; both counted.
[[nodiscard]] SlopeSurface slope_surface(const panel::Observations& obs, Variable variable,
                                         std::span<const int> t_list, int dt_max, double r2_min);

}  // namespace pubdebt::regress
