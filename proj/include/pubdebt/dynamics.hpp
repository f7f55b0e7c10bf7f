#pragma once

// Debt dynamics: the government budget recursion for total debt, a per-capita
// growth model r_d(d) = c * d^(gamma - 1) - r_pop, and seeded synthetic panels
// with a known convergence speed.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pubdebt/panel.hpp"

namespace pubdebt::dynamics {

/// Per-step value that is either constant or given as a series of one value per step.
class StepSeries {
public:
    StepSeries(double constant = 0.0) : data_(constant) {}  // NOLINT(implicit)
    StepSeries(std::vector<double> values) : data_(std::move(values)) {}  // NOLINT(implicit)

    [[nodiscard]] bool is_constant() const noexcept { return std::holds_alternative<double>(data_); }
    [[nodiscard]] std::size_t size() const noexcept;
    /// Value used on step `step` (0-based).
    [[nodiscard]] double at(std::size_t step) const;

private:
    std::variant<double, std::vector<double>> data_;
};

struct BudgetParams {
    double d0 = 0.0;              // initial total debt D(0)
    StepSeries interest;          // I_D applied to D(t-1) on step t
    StepSeries primary_deficit;   // S(t) - T(t) added on step t
    int horizon = 1;
};

/// D(t) = (1 + I(t-1)) D(t-1) + deficit(t) for t = 1..horizon; returns horizon + 1
/// values including D(0). Series inputs must hold exactly `horizon` values
/// (Error(SeriesLengthMismatch)); horizon < 1 is Error(InvalidParameter).
[[nodiscard]] std::vector<double> step_debt(const BudgetParams& params);

struct ModelParams {
    double c = 0.05;       // composite borrowing constant
    double gamma = 0.9;    // GDP-debt scaling exponent
    double r_pop = 0.01;   // population growth per year
    double d0 = 1.0;       // initial per-capita debt
    double dt_step = 1e-3; // integration step in years
    double horizon = 50.0; // years
};

/// Throws Error(InvalidParameter) unless d0 > 0, dt_step > 0, horizon > 0,
/// gamma in (0, 1.2] and all values finite.
void validate(const ModelParams& params);

/// r_d(d) = c / d^(1 - gamma) - r_pop.
[[nodiscard]] double debt_growth_rate(const ModelParams& params, double d);

/// dr_d/dd = -c (1 - gamma) / d^(2 - gamma). Throws Error(NonPositiveDebt) for d <= 0.
[[nodiscard]] double local_slope(const ModelParams& params, double d);

enum class Termination { Completed, Blowup, Underflow };

[[nodiscard]] std::string_view to_string(Termination t) noexcept;

inline constexpr double kBlowupLevel = 1e12;
inline constexpr double kUnderflowLevel = 1e-12;

struct SimPath {
    std::vector<double> times;
    std::vector<double> d_values;
    Termination terminal_flag = Termination::Completed;
};

/// Explicit Euler on log d: log d += dt_step * r_d(d). Stops early, flagging
/// Blowup (d > 1e12) or Underflow (d < 1e-12); the crossing point is kept.
[[nodiscard]] SimPath simulate_model(const ModelParams& params);

// ---------------------------------------------------------------------------
// Synthetic panels
// ---------------------------------------------------------------------------

enum class Evolution {
    /// log d(t+1) = alpha + (1 - beta) log d(t) + noise, year by year.
    Annual,
    /// log d(t0 + h) = alpha h + (1 - beta h) log d(t0) + noise, every year
    /// generated directly from the first year.
    Anchored,
};

struct SyntheticConfig {
    std::size_t n_countries = 100;
    std::vector<int> years;        // strictly increasing
    double alpha = 0.05;
    double beta = 0.02;
    double sigma = 0.1;            // std of the additive noise on log d
    std::uint64_t seed = 1;
    double log_d0_min = -3.0;      // initial log d drawn uniformly on [min, max]
    double log_d0_max = 3.0;
    double gdp_prefactor = 2.0;    // g = A d^gamma
    double gdp_exponent = 0.9;
    Evolution evolution = Evolution::Annual;
};

/// Deterministic for a fixed config. Countries are coded AAA, AAB, ...; income
/// groups are initial-debt terciles; the deflator is unity. Throws
/// Error(InvalidBeta) when beta * (last year - first year) >= 1 and
/// Error(InvalidParameter) for other invalid settings.
[[nodiscard]] panel::Panel synthetic_convergent_panel(const SyntheticConfig& config);

/// Three-letter code for a 0-based country index.
[[nodiscard]] std::string synthetic_country_code(std::size_t index);

}  // namespace pubdebt::dynamics
