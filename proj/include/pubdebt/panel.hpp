#pragma once

// Country-year panel of public debt, GDP and population.
//
// Raw records carry nominal current-USD totals. normalize() turns them into
// real per-capita series (thousands of base-year USD per person) and the
// debt-to-GDP ratio R = D/G, which is deflator-free.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pubdebt/error.hpp"

namespace pubdebt::panel {

enum class IncomeGroup { Low, Medium, High };

[[nodiscard]] std::string_view to_string(IncomeGroup group) noexcept;
/// Case-insensitive; accepts LOW / MEDIUM / HIGH.
[[nodiscard]] std::optional<IncomeGroup> parse_income_group(std::string_view text);

struct CountryYearRecord {
    std::string country_code;
    int year = 0;
    double gdp_nominal = 0.0;   // current USD
    double debt_nominal = 0.0;  // current USD, total public debt
    double population = 0.0;    // persons
    IncomeGroup income_group = IncomeGroup::Low;
};

/// Price index per year, normalized so that deflator(base_year) == 1.
class DeflatorSeries {
public:
    static constexpr int kDefaultBaseYear = 2000;

    /// Throws Error(MissingDeflator) when base_year is absent or not exactly 1.0,
    /// Error(NonPositive) for any value <= 0 or non-finite.
    DeflatorSeries(std::map<int, double> values, int base_year = kDefaultBaseYear);

    /// Unit deflator covering `years` plus the base year.
    [[nodiscard]] static DeflatorSeries unit(const std::vector<int>& years,
                                             int base_year = kDefaultBaseYear);

    [[nodiscard]] int base_year() const noexcept { return base_year_; }
    [[nodiscard]] bool contains(int year) const { return values_.count(year) != 0; }
    /// Throws Error(MissingDeflator) if the year is absent.
    [[nodiscard]] double at(int year) const;
    [[nodiscard]] const std::map<int, double>& values() const noexcept { return values_; }

    friend bool operator==(const DeflatorSeries&, const DeflatorSeries&) = default;

private:
    std::map<int, double> values_;
    int base_year_;
};

/// Validated, immutable collection of records in insertion order.
class Panel {
public:
    /// Validates every record invariant and throws Error on the first violation:
    /// NonPositive, DuplicateKey, MissingDeflator, InconsistentIncomeGroup or MalformedRow.
    Panel(std::vector<CountryYearRecord> records, DeflatorSeries deflator);

    [[nodiscard]] const std::vector<CountryYearRecord>& records() const noexcept { return records_; }
    [[nodiscard]] const DeflatorSeries& deflator() const noexcept { return deflator_; }
    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }

    /// Distinct years present, ascending.
    [[nodiscard]] std::vector<int> years() const;

private:
    std::vector<CountryYearRecord> records_;
    DeflatorSeries deflator_;
};

struct PerCapitaObservation {
    std::string country_code;
    int year = 0;
    double d = 0.0;        // real per-capita debt, 1e3 base-year USD / person
    double g = 0.0;        // real per-capita GDP, same units
    double ratio_R = 0.0;  // D / G
    IncomeGroup income_group = IncomeGroup::Low;
};

using Observations = std::vector<PerCapitaObservation>;

enum class Field { d, g, R };

[[nodiscard]] std::string_view to_string(Field field) noexcept;

/// Per-capita values in thousands of base-year USD; order follows the panel.
[[nodiscard]] Observations normalize(const Panel& panel);

[[nodiscard]] double value_of(const PerCapitaObservation& obs, Field field) noexcept;

/// country_code -> value for one year. Throws Error(EmptyCrossSection) when no
/// observation exists for the year.
[[nodiscard]] std::map<std::string, double> cross_section(const Observations& obs, int year,
                                                          Field field);

[[nodiscard]] Observations filter_income_group(const Observations& obs, IncomeGroup group);
[[nodiscard]] std::vector<CountryYearRecord> filter_income_group(
    const std::vector<CountryYearRecord>& records, IncomeGroup group);

/// Pooled values of one field over all observations, in observation order.
[[nodiscard]] std::vector<double> pooled(const Observations& obs, Field field);

/// Distinct years present, ascending.
[[nodiscard]] std::vector<int> years_of(const Observations& obs);

// ---------------------------------------------------------------------------
// CSV interchange
// ---------------------------------------------------------------------------

inline constexpr std::string_view kPanelHeader =
    "country_code,year,gdp_nominal_usd,debt_nominal_usd,population,income_group";
inline constexpr std::string_view kDeflatorHeader = "year,deflator";

struct RowIssue {
    std::size_t line = 0;  // 1-based line number in the source file
    ErrorKind kind = ErrorKind::MalformedRow;
    std::string message;
};

/// Thrown when one or more rows are rejected; kind() is that of the first issue.
class IngestError : public Error {
public:
    IngestError(std::string source, std::vector<RowIssue> issues);

    [[nodiscard]] const std::vector<RowIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<RowIssue> issues_;
};

/// Parses a deflator CSV. Lines starting with '#' and blank lines are ignored.
[[nodiscard]] DeflatorSeries parse_deflator_csv(std::string_view text,
                                                const std::string& source = "<deflator>");

/// Parses a panel CSV against a deflator series. All rejected rows are collected;
/// if any exist an IngestError is thrown listing them with line numbers.
[[nodiscard]] Panel parse_panel_csv(std::string_view text, const DeflatorSeries& deflator,
                                    const std::string& source = "<panel>");

/// Reads both files; Error(MissingFile) names the missing path.
[[nodiscard]] Panel ingest_csv(const std::filesystem::path& path,
                               const std::filesystem::path& deflator_path);

[[nodiscard]] std::string write_panel_csv(const Panel& panel);
[[nodiscard]] std::string write_deflator_csv(const DeflatorSeries& deflator);

}  // namespace pubdebt::panel
