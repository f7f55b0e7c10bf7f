#include "pubdebt/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

namespace pubdebt::dynamics {

std::size_t StepSeries::size() const noexcept {
    if (const auto* v = std::get_if<std::vector<double>>(&data_)) return v->size();
    return 0;
}

double StepSeries::at(std::size_t step) const {
    if (const auto* c = std::get_if<double>(&data_)) return *c;
    const auto& v = std::get<std::vector<double>>(data_);
    if (step >= v.size()) {
        throw Error(ErrorKind::SeriesLengthMismatch, fmt::format("series has no value for step {}", step));
    }
    return v[step];
}

std::vector<double> step_debt(const BudgetParams& params) {
    if (params.horizon < 1) throw Error(ErrorKind::InvalidParameter, "horizon must be >= 1");
    const auto horizon = static_cast<std::size_t>(params.horizon);
    for (const auto* series : {&params.interest, &params.primary_deficit}) {
        if (!series->is_constant() && series->size() != horizon) {
            throw Error(ErrorKind::SeriesLengthMismatch,
                        fmt::format("series has {} values, horizon is {}", series->size(), horizon));
        }
    }
    std::vector<double> debt(horizon + 1);
    debt[0] = params.d0;
    for (std::size_t t = 1; t <= horizon; ++t) {
        debt[t] = (1.0 + params.interest.at(t - 1)) * debt[t - 1] + params.primary_deficit.at(t - 1);
    }
    return debt;
}

// ---------------------------------------------------------------------------

void validate(const ModelParams& p) {
    const bool finite = std::isfinite(p.c) && std::isfinite(p.gamma) && std::isfinite(p.r_pop) &&
                        std::isfinite(p.d0) && std::isfinite(p.dt_step) && std::isfinite(p.horizon);
    if (!finite) throw Error(ErrorKind::InvalidParameter, "model parameters must be finite");
    if (!(p.d0 > 0.0)) throw Error(ErrorKind::InvalidParameter, "d0 must be > 0");
    if (!(p.dt_step > 0.0)) throw Error(ErrorKind::InvalidParameter, "dt_step must be > 0");
    if (!(p.horizon > 0.0)) throw Error(ErrorKind::InvalidParameter, "horizon must be > 0");
    if (!(p.gamma > 0.0 && p.gamma <= 1.2)) {
        throw Error(ErrorKind::InvalidParameter, "gamma must lie in (0, 1.2]");
    }
}

double debt_growth_rate(const ModelParams& p, double d) {
    if (!(d > 0.0)) throw Error(ErrorKind::NonPositiveDebt, "per-capita debt must be > 0");
    return p.c * std::pow(d, p.gamma - 1.0) - p.r_pop;
}

double local_slope(const ModelParams& p, double d) {
    if (!(d > 0.0)) throw Error(ErrorKind::NonPositiveDebt, "per-capita debt must be > 0");
    return -p.c * (1.0 - p.gamma) / std::pow(d, 2.0 - p.gamma);
}

std::string_view to_string(Termination t) noexcept {
    switch (t) {
        case Termination::Completed: return "Completed";
        case Termination::Blowup: return "Blowup";
        case Termination::Underflow: return "Underflow";
    }
    return "Completed";
}

SimPath simulate_model(const ModelParams& p) {
    validate(p);
    const auto steps = std::max<long long>(1, std::llround(p.horizon / p.dt_step));

    SimPath path;
    path.times.reserve(static_cast<std::size_t>(steps) + 1);
    path.d_values.reserve(static_cast<std::size_t>(steps) + 1);
    path.times.push_back(0.0);
    path.d_values.push_back(p.d0);

    double log_d = std::log(p.d0);
    double d = p.d0;
    for (long long i = 1; i <= steps; ++i) {
        log_d += p.dt_step * (p.c * std::exp((p.gamma - 1.0) * log_d) - p.r_pop);
        d = std::exp(log_d);
        path.times.push_back(static_cast<double>(i) * p.dt_step);
        path.d_values.push_back(d);
        if (d > kBlowupLevel) {
            path.terminal_flag = Termination::Blowup;
            break;
        }
        if (d < kUnderflowLevel) {
            path.terminal_flag = Termination::Underflow;
            break;
        }
    }
    return path;
}

// ---------------------------------------------------------------------------

std::string synthetic_country_code(std::size_t index) {
    std::string code(3, 'A');
    for (int pos = 2; pos >= 0; --pos) {
        code[static_cast<std::size_t>(pos)] = static_cast<char>('A' + index % 26);
        index /= 26;
    }
    return code;
}

panel::Panel synthetic_convergent_panel(const SyntheticConfig& cfg) {
    if (cfg.n_countries < 3 || cfg.n_countries > 26 * 26 * 26) {
        throw Error(ErrorKind::InvalidParameter, "n_countries must lie in [3, 17576]");
    }
    if (cfg.years.empty()) throw Error(ErrorKind::InvalidParameter, "year list is empty");
    for (std::size_t i = 1; i < cfg.years.size(); ++i) {
        if (cfg.years[i] <= cfg.years[i - 1]) {
            throw Error(ErrorKind::InvalidParameter, "years must be strictly increasing");
        }
    }
    if (!(cfg.sigma >= 0.0) || !std::isfinite(cfg.alpha) || !std::isfinite(cfg.beta) ||
        !(cfg.log_d0_min <= cfg.log_d0_max) || !(cfg.gdp_prefactor > 0.0) ||
        !std::isfinite(cfg.gdp_exponent)) {
        throw Error(ErrorKind::InvalidParameter, "invalid synthetic panel settings");
    }
    const int first = cfg.years.front();
    const int last = cfg.years.back();
    if (cfg.beta * static_cast<double>(last - first) >= 1.0) {
        throw Error(ErrorKind::InvalidBeta,
                    fmt::format("beta * max horizon = {} must be < 1", cfg.beta * (last - first)));
    }

    const std::size_t n = cfg.n_countries;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> initial(cfg.log_d0_min, cfg.log_d0_max);
    std::normal_distribution<double> noise(0.0, 1.0);

    std::vector<double> log_d0(n);
    for (auto& x : log_d0) x = initial(rng);

    // log_d[year offset][country]; only emitted years are kept.
    const std::set<int> wanted(cfg.years.begin(), cfg.years.end());
    std::vector<std::vector<double>> emitted;
    emitted.push_back(log_d0);
    std::vector<double> current = log_d0;
    for (int year = first + 1; year <= last; ++year) {
        const double h = static_cast<double>(year - first);
        for (std::size_t i = 0; i < n; ++i) {
            const double eps = cfg.sigma * noise(rng);
            if (cfg.evolution == Evolution::Annual) {
                current[i] = cfg.alpha + (1.0 - cfg.beta) * current[i] + eps;
            } else {
                current[i] = cfg.alpha * h + (1.0 - cfg.beta * h) * log_d0[i] + eps;
            }
        }
        if (wanted.count(year)) emitted.push_back(current);
    }

    // Income groups by initial-debt tercile.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return log_d0[a] < log_d0[b]; });
    std::vector<panel::IncomeGroup> group(n);
    for (std::size_t r = 0; r < n; ++r) {
        group[order[r]] = r * 3 < n ? panel::IncomeGroup::Low
                          : r * 3 < 2 * n ? panel::IncomeGroup::Medium
                                          : panel::IncomeGroup::High;
    }

    std::vector<panel::CountryYearRecord> records;
    records.reserve(n * cfg.years.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double population = 1e6 * static_cast<double>(1 + i % 97);
        for (std::size_t y = 0; y < cfg.years.size(); ++y) {
            const double d = std::exp(emitted[y][i]);
            const double g = cfg.gdp_prefactor * std::pow(d, cfg.gdp_exponent);
            panel::CountryYearRecord r;
            r.country_code = synthetic_country_code(i);
            r.year = cfg.years[y];
            r.debt_nominal = d * 1000.0 * population;
            r.gdp_nominal = g * 1000.0 * population;
            r.population = population;
            r.income_group = group[i];
            records.push_back(std::move(r));
        }
    }
    return panel::Panel(std::move(records), panel::DeflatorSeries::unit(cfg.years));
}

}  // namespace pubdebt::dynamics
