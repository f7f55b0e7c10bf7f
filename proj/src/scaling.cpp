#include "pubdebt/scaling.hpp"

#include <cmath>

#include "pubdebt/regress.hpp"

namespace pubdebt::scaling {

ScalingFit fit_gdp_debt_scaling(const panel::Observations& obs, int year) {
    const auto debt = panel::cross_section(obs, year, panel::Field::d);
    const auto gdp = panel::cross_section(obs, year, panel::Field::g);

    ScalingFit fit;
    fit.year = year;
    std::vector<double> log_d;
    std::vector<double> log_g;
    for (const auto& [country, d] : debt) {
        const double g = gdp.at(country);
        if (!(d > 0.0) || !(g > 0.0)) {
            ++fit.excluded_nonpositive;
            continue;
        }
        log_d.push_back(std::log(d));
        log_g.push_back(std::log(g));
    }
    if (log_d.size() < 3) {
        throw Error(ErrorKind::TooFewCountries,
                    "only " + std::to_string(log_d.size()) + " countries with positive debt in " +
                        std::to_string(year));
    }
    const auto ls = regress::ols(log_d, log_g);
    fit.gamma = ls.slope;
    fit.log_A = ls.intercept;
    fit.r_squared = ls.r_squared;
    fit.n_countries = ls.n;
    return fit;
}

GammaTrend gamma_trend(const panel::Observations& obs, std::span<const int> years) {
    if (years.empty()) throw Error(ErrorKind::InvalidParameter, "year list is empty");
    GammaTrend trend;
    for (int year : years) {
        try {
            trend.fits.push_back(fit_gdp_debt_scaling(obs, year));
        } catch (const Error& e) {
            switch (e.kind()) {
                case ErrorKind::EmptyCrossSection:
                case ErrorKind::TooFewCountries:
                case ErrorKind::DegenerateX:
                    trend.skipped_years.push_back(year);
                    break;
                default:
                    throw;
            }
        }
    }
    return trend;
}

}  // namespace pubdebt::scaling
