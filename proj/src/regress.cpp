#include "pubdebt/regress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pubdebt::regress {

OlsFit ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::TooFewPoints, "x and y differ in length");
    }
    const std::size_t n = x.size();
    if (n < 3) throw Error(ErrorKind::TooFewPoints, "need at least 3 points, got " + std::to_string(n));

    double x_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    double x_scale = 0.0;
    double y_scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
        x_scale = std::max(x_scale, std::abs(x[i]));
        y_scale = std::max(y_scale, std::abs(y[i]));
    }

    // Centered sums of a constant column are pure rounding noise of order eps * scale.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double nd = static_cast<double>(n);
    if (!(sxx > nd * (16.0 * eps * x_scale) * (16.0 * eps * x_scale))) {
        throw Error(ErrorKind::DegenerateX, "regressor has zero variance");
    }

    OlsFit fit;
    fit.n = n;
    if (!(syy > nd * (16.0 * eps * y_scale) * (16.0 * eps * y_scale))) {
        fit.slope = 0.0;
        fit.intercept = y_mean;
        fit.r_squared = 0.0;
        fit.flat_response = true;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    // SS_res = syy - slope * sxy for the least-squares line.
    double r2 = (fit.slope * sxy) / syy;
    fit.r_squared = std::clamp(r2, 0.0, 1.0);
    return fit;
}

double growth_rate(double v_start, double v_end, int dt) {
    if (dt < 1) throw Error(ErrorKind::InvalidParameter, "dt must be >= 1");
    if (!(v_start > 0.0) || !(v_end > 0.0)) {
        throw Error(ErrorKind::NonPositiveValue, "growth rate needs positive endpoints");
    }
    return std::log(v_end / v_start) / static_cast<double>(dt);
}

panel::Field field_of(Variable variable) noexcept {
    switch (variable) {
        case Variable::debt_per_capita: return panel::Field::d;
        case Variable::gdp_per_capita: return panel::Field::g;
        case Variable::ratio_R: return panel::Field::R;
    }
    return panel::Field::d;
}

std::string_view tag(Variable variable) noexcept { return panel::to_string(field_of(variable)); }

ConvergenceFit convergence_regression(const panel::Observations& obs, Variable variable, int t, int dt) {
    if (dt < 1) throw Error(ErrorKind::InvalidParameter, "dt must be >= 1");
    const auto field = field_of(variable);
    const auto start = panel::cross_section(obs, t, field);
    const auto end = panel::cross_section(obs, t + dt, field);

    ConvergenceFit fit;
    fit.variable = variable;
    fit.t = t;
    fit.dt = dt;

    std::vector<double> x;
    std::vector<double> y;
    for (const auto& [country, v0] : start) {
        auto it = end.find(country);
        if (it == end.end()) {
            ++fit.excluded_missing;
            continue;
        }
        if (!(v0 > 0.0) || !(it->second > 0.0)) {
            ++fit.excluded_nonpositive;
            continue;
        }
        x.push_back(std::log(v0));
        y.push_back(std::log(it->second));
    }
    for (const auto& [country, v1] : end) {
        if (!start.count(country)) ++fit.excluded_missing;
    }
    if (x.size() < 3) {
        throw Error(ErrorKind::TooFewCountries,
                    "only " + std::to_string(x.size()) + " usable countries for " +
                        std::string(tag(variable)) + " at t=" + std::to_string(t) +
                        ", dt=" + std::to_string(dt));
    }

    const auto ls = ols(x, y);
    const double span = static_cast<double>(dt);
    fit.S = ls.slope;
    fit.beta = (1.0 - ls.slope) / span;
    fit.alpha = ls.intercept / span;
    fit.r_squared = ls.r_squared;
    fit.n_countries = ls.n;
    return fit;
}

SlopeSurface slope_surface(const panel::Observations& obs, Variable variable,
                           std::span<const int> t_list, int dt_max, double r2_min) {
    if (t_list.empty()) throw Error(ErrorKind::InvalidParameter, "t_list is empty");
    if (dt_max < 1) throw Error(ErrorKind::InvalidParameter, "dt_max must be >= 1");

    SlopeSurface surface;
    surface.variable = variable;
    surface.r2_min = r2_min;
    for (int t : t_list) {
        for (int dt = 1; dt <= dt_max; ++dt) {
            try {
                auto fit = convergence_regression(obs, variable, t, dt);
                if (fit.r_squared < r2_min) {
                    ++surface.dropped_low_r2;
                    continue;
                }
                surface.entries.push_back(fit);
            } catch (const Error& e) {
                switch (e.kind()) {
                    case ErrorKind::EmptyCrossSection:
                    case ErrorKind::TooFewCountries:
                    case ErrorKind::DegenerateX:
                        ++surface.skipped_insufficient;
                        break;
                    default:
                        throw;
                }
            }
        }
    }
    return surface;
}

}  // namespace pubdebt::regress
