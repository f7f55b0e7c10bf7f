#include "pubdebt/panel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <unordered_map>
#include <utility>

namespace pubdebt::panel {

std::string_view to_string(IncomeGroup group) noexcept {
    switch (group) {
        case IncomeGroup::Low: return "LOW";
        case IncomeGroup::Medium: return "MEDIUM";
        case IncomeGroup::High: return "HIGH";
    }
    return "LOW";
}

std::optional<IncomeGroup> parse_income_group(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "LOW") return IncomeGroup::Low;
    if (upper == "MEDIUM") return IncomeGroup::Medium;
    if (upper == "HIGH") return IncomeGroup::High;
    return std::nullopt;
}

std::string_view to_string(Field field) noexcept {
    switch (field) {
        case Field::d: return "d";
        case Field::g: return "g";
        case Field::R: return "R";
    }
    return "d";
}

// ---------------------------------------------------------------------------

DeflatorSeries::DeflatorSeries(std::map<int, double> values, int base_year)
    : values_(std::move(values)), base_year_(base_year) {
    for (const auto& [year, value] : values_) {
        if (!std::isfinite(value) || value <= 0.0) {
            throw Error(ErrorKind::NonPositive,
                        "deflator for year " + std::to_string(year) + " must be positive");
        }
    }
    auto it = values_.find(base_year_);
    if (it == values_.end()) {
        throw Error(ErrorKind::MissingDeflator,
                    "deflator series lacks base year " + std::to_string(base_year_));
    }
    if (it->second != 1.0) {
        throw Error(ErrorKind::MissingDeflator,
                    "deflator for base year " + std::to_string(base_year_) + " must be exactly 1.0");
    }
}

DeflatorSeries DeflatorSeries::unit(const std::vector<int>& years, int base_year) {
    std::map<int, double> values;
    for (int y : years) values[y] = 1.0;
    values[base_year] = 1.0;
    return DeflatorSeries(std::move(values), base_year);
}

double DeflatorSeries::at(int year) const {
    auto it = values_.find(year);
    if (it == values_.end()) {
        throw Error(ErrorKind::MissingDeflator, "no deflator for year " + std::to_string(year));
    }
    return it->second;
}

// ---------------------------------------------------------------------------

namespace {

bool valid_country_code(const std::string& code) {
    return code.size() == 3 &&
           std::all_of(code.begin(), code.end(), [](unsigned char c) { return std::isalnum(c); });
}

}  // namespace

Panel::Panel(std::vector<CountryYearRecord> records, DeflatorSeries deflator)
    : records_(std::move(records)), deflator_(std::move(deflator)) {
    std::set<std::pair<std::string, int>> keys;
    std::unordered_map<std::string, IncomeGroup> groups;
    for (const auto& r : records_) {
        const std::string where = r.country_code + "," + std::to_string(r.year);
        if (!valid_country_code(r.country_code)) {
            throw Error(ErrorKind::MalformedRow, "country code '" + r.country_code +
                                                     "' is not a 3-character identifier");
        }
        if (!std::isfinite(r.gdp_nominal) || !std::isfinite(r.debt_nominal) ||
            !std::isfinite(r.population)) {
            throw Error(ErrorKind::MalformedRow, "non-finite value in " + where);
        }
        if (r.population <= 0.0) throw Error(ErrorKind::NonPositive, "population <= 0 in " + where);
        if (r.gdp_nominal <= 0.0) throw Error(ErrorKind::NonPositive, "GDP <= 0 in " + where);
        if (r.debt_nominal < 0.0) throw Error(ErrorKind::NonPositive, "debt < 0 in " + where);
        if (!keys.emplace(r.country_code, r.year).second) {
            throw Error(ErrorKind::DuplicateKey, "repeated country-year " + where);
        }
        if (!deflator_.contains(r.year)) {
            throw Error(ErrorKind::MissingDeflator, "no deflator for year " + std::to_string(r.year));
        }
        auto [it, inserted] = groups.emplace(r.country_code, r.income_group);
        if (!inserted && it->second != r.income_group) {
            throw Error(ErrorKind::InconsistentIncomeGroup,
                        "country " + r.country_code + " carries more than one income group");
        }
    }
}

std::vector<int> Panel::years() const {
    std::set<int> ys;
    for (const auto& r : records_) ys.insert(r.year);
    return {ys.begin(), ys.end()};
}

// ---------------------------------------------------------------------------

Observations normalize(const Panel& panel) {
    Observations out;
    out.reserve(panel.size());
    for (const auto& r : panel.records()) {
        const double deflator = panel.deflator().at(r.year);
        PerCapitaObservation o;
        o.country_code = r.country_code;
        o.year = r.year;
        o.d = (r.debt_nominal / deflator) / r.population / 1000.0;
        o.g = (r.gdp_nominal / deflator) / r.population / 1000.0;
        o.ratio_R = r.debt_nominal / r.gdp_nominal;
        o.income_group = r.income_group;
        out.push_back(std::move(o));
    }
    return out;
}

double value_of(const PerCapitaObservation& obs, Field field) noexcept {
    switch (field) {
        case Field::d: return obs.d;
        case Field::g: return obs.g;
        case Field::R: return obs.ratio_R;
    }
    return obs.d;
}

std::map<std::string, double> cross_section(const Observations& obs, int year, Field field) {
    std::map<std::string, double> out;
    for (const auto& o : obs) {
        if (o.year == year) out.emplace(o.country_code, value_of(o, field));
    }
    if (out.empty()) {
        throw Error(ErrorKind::EmptyCrossSection, "no country observed in " + std::to_string(year));
    }
    return out;
}

Observations filter_income_group(const Observations& obs, IncomeGroup group) {
    Observations out;
    std::copy_if(obs.begin(), obs.end(), std::back_inserter(out),
                 [group](const auto& o) { return o.income_group == group; });
    return out;
}

std::vector<CountryYearRecord> filter_income_group(const std::vector<CountryYearRecord>& records,
                                                   IncomeGroup group) {
    std::vector<CountryYearRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [group](const auto& r) { return r.income_group == group; });
    return out;
}

std::vector<double> pooled(const Observations& obs, Field field) {
    std::vector<double> out;
    out.reserve(obs.size());
    for (const auto& o : obs) out.push_back(value_of(o, field));
    return out;
}

std::vector<int> years_of(const Observations& obs) {
    std::set<int> ys;
    for (const auto& o : obs) ys.insert(o.year);
    return {ys.begin(), ys.end()};
}

}  // namespace pubdebt::panel
