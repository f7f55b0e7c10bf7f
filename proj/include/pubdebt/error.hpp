#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pubdebt {

enum class ErrorKind {
    // input / data
    MissingFile,
    MalformedRow,
    DuplicateKey,
    MissingDeflator,
    NonPositive,
    InconsistentIncomeGroup,
    EmptyCrossSection,
    TooFewCountries,
    TooFewPoints,
    EmptySample,
    NonFiniteValue,
    NonPositiveSample,
    NonPositiveValue,
    NonPositiveDebt,
    WindowTooSmall,
    NonPositiveInWindow,
    SeriesLengthMismatch,
    InvalidParameter,
    InvalidBeta,
    // numerical
    DegenerateX,
    DegenerateSample,
    NoConvergence,
};

enum class ErrorCategory { Usage, Data, Numerical };

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;
[[nodiscard]] ErrorCategory category(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingFile: return "MissingFile";
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::DuplicateKey: return "DuplicateKey";
        case ErrorKind::MissingDeflator: return "MissingDeflator";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::InconsistentIncomeGroup: return "InconsistentIncomeGroup";
        case ErrorKind::EmptyCrossSection: return "EmptyCrossSection";
        case ErrorKind::TooFewCountries: return "TooFewCountries";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::NonFiniteValue: return "NonFiniteValue";
        case ErrorKind::NonPositiveSample: return "NonPositiveSample";
        case ErrorKind::NonPositiveValue: return "NonPositiveValue";
        case ErrorKind::NonPositiveDebt: return "NonPositiveDebt";
        case ErrorKind::WindowTooSmall: return "WindowTooSmall";
        case ErrorKind::NonPositiveInWindow: return "NonPositiveInWindow";
        case ErrorKind::SeriesLengthMismatch: return "SeriesLengthMismatch";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidBeta: return "InvalidBeta";
        case ErrorKind::DegenerateX: return "DegenerateX";
        case ErrorKind::DegenerateSample: return "DegenerateSample";
        case ErrorKind::NoConvergence: return "NoConvergence";
    }
    return "Unknown";
}

inline ErrorCategory category(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter:
        case ErrorKind::InvalidBeta:
        case ErrorKind::SeriesLengthMismatch:
            return ErrorCategory::Usage;
        case ErrorKind::DegenerateX:
        case ErrorKind::DegenerateSample:
        case ErrorKind::NoConvergence:
            return ErrorCategory::Numerical;
        default:
            return ErrorCategory::Data;
    }
}

}  // namespace pubdebt
