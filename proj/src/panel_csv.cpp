#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "pubdebt/panel.hpp"

namespace pubdebt::panel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep = ',') {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = first + text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto pos = text.find('\n', start);
        auto raw = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        ++number;
        auto line = trim(raw);
        if (!line.empty() && line.front() != '#') out.push_back({number, line});
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::MissingFile, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

IngestError::IngestError(std::string source, std::vector<RowIssue> issues)
    : Error(issues.empty() ? ErrorKind::MalformedRow : issues.front().kind,
            [&] {
                std::string msg = std::to_string(issues.size()) + " rejected row(s) in " + source;
                for (const auto& i : issues) {
                    msg += "\n  line " + std::to_string(i.line) + ": " +
                           std::string(pubdebt::to_string(i.kind)) + ": " + i.message;
                }
                return msg;
            }()),
      issues_(std::move(issues)) {}

DeflatorSeries parse_deflator_csv(std::string_view text, const std::string& source) {
    auto lines = content_lines(text);
    std::vector<RowIssue> issues;
    if (lines.empty() || lines.front().text != kDeflatorHeader) {
        issues.push_back({lines.empty() ? 1 : lines.front().number, ErrorKind::MalformedRow,
                          "expected header '" + std::string(kDeflatorHeader) + "'"});
        throw IngestError(source, std::move(issues));
    }
    std::map<int, double> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, line] = lines[i];
        auto fields = split(line);
        int year = 0;
        double value = 0.0;
        if (fields.size() != 2 || !parse_number(fields[0], year) || !parse_number(fields[1], value) ||
            !std::isfinite(value)) {
            issues.push_back({number, ErrorKind::MalformedRow, "expected 'year,deflator'"});
            continue;
        }
        if (value <= 0.0) {
            issues.push_back({number, ErrorKind::NonPositive, "deflator must be positive"});
            continue;
        }
        if (!values.emplace(year, value).second) {
            issues.push_back({number, ErrorKind::DuplicateKey, "repeated year " + std::to_string(year)});
        }
    }
    if (!issues.empty()) throw IngestError(source, std::move(issues));
    return DeflatorSeries(std::move(values));
}

Panel parse_panel_csv(std::string_view text, const DeflatorSeries& deflator, const std::string& source) {
    auto lines = content_lines(text);
    std::vector<RowIssue> issues;
    if (lines.empty() || lines.front().text != kPanelHeader) {
        issues.push_back({lines.empty() ? 1 : lines.front().number, ErrorKind::MalformedRow,
                          "expected header '" + std::string(kPanelHeader) + "'"});
        throw IngestError(source, std::move(issues));
    }

    std::vector<CountryYearRecord> records;
    std::set<std::pair<std::string, int>> keys;
    std::unordered_map<std::string, IncomeGroup> groups;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, line] = lines[i];
        auto fields = split(line);
        if (fields.size() != 6) {
            issues.push_back({number, ErrorKind::MalformedRow,
                              "expected 6 fields, found " + std::to_string(fields.size())});
            continue;
        }
        CountryYearRecord r;
        r.country_code = std::string(fields[0]);
        if (r.country_code.size() != 3) {
            issues.push_back({number, ErrorKind::MalformedRow, "country_code must have 3 characters"});
            continue;
        }
        if (!parse_number(fields[1], r.year)) {
            issues.push_back({number, ErrorKind::MalformedRow, "year is not an integer"});
            continue;
        }
        if (!parse_number(fields[2], r.gdp_nominal) || !parse_number(fields[3], r.debt_nominal) ||
            !parse_number(fields[4], r.population) || !std::isfinite(r.gdp_nominal) ||
            !std::isfinite(r.debt_nominal) || !std::isfinite(r.population)) {
            issues.push_back({number, ErrorKind::MalformedRow, "non-numeric GDP, debt or population"});
            continue;
        }
        auto group = parse_income_group(fields[5]);
        if (!group) {
            issues.push_back({number, ErrorKind::MalformedRow,
                              "income_group '" + std::string(fields[5]) + "' not in LOW/MEDIUM/HIGH"});
            continue;
        }
        r.income_group = *group;
        if (r.population <= 0.0 || r.gdp_nominal <= 0.0 || r.debt_nominal < 0.0) {
            issues.push_back({number, ErrorKind::NonPositive,
                              "population and GDP must be > 0, debt >= 0"});
            continue;
        }
        if (!keys.emplace(r.country_code, r.year).second) {
            issues.push_back({number, ErrorKind::DuplicateKey,
                              "repeated country-year " + r.country_code + "," + std::to_string(r.year)});
            continue;
        }
        if (!deflator.contains(r.year)) {
            issues.push_back({number, ErrorKind::MissingDeflator,
                              "no deflator for year " + std::to_string(r.year)});
            continue;
        }
        auto [it, inserted] = groups.emplace(r.country_code, r.income_group);
        if (!inserted && it->second != r.income_group) {
            issues.push_back({number, ErrorKind::InconsistentIncomeGroup,
                              "income group differs from earlier rows of " + r.country_code});
            continue;
        }
        records.push_back(std::move(r));
    }
    if (!issues.empty()) throw IngestError(source, std::move(issues));
    return Panel(std::move(records), deflator);
}

Panel ingest_csv(const std::filesystem::path& path, const std::filesystem::path& deflator_path) {
    const auto panel_text = read_file(path);
    auto deflator = parse_deflator_csv(read_file(deflator_path), deflator_path.string());
    return parse_panel_csv(panel_text, deflator, path.string());
}

std::string write_panel_csv(const Panel& panel) {
    std::string out(kPanelHeader);
    out += '\n';
    for (const auto& r : panel.records()) {
        out += fmt::format("{},{},{},{},{},{}\n", r.country_code, r.year, r.gdp_nominal,
                           r.debt_nominal, r.population, to_string(r.income_group));
    }
    return out;
}

std::string write_deflator_csv(const DeflatorSeries& deflator) {
    std::string out(kDeflatorHeader);
    out += '\n';
    for (const auto& [year, value] : deflator.values()) {
        out += fmt::format("{},{}\n", year, value);
    }
    return out;
}

}  // namespace pubdebt::panel
