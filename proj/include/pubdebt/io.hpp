#pragma once

// Plot-ready serializations of analysis results. Every CSV writer takes an
// optional comment header (without the leading '#') emitted as the first line.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pubdebt/dist.hpp"
#include "pubdebt/dynamics.hpp"
#include "pubdebt/regress.hpp"
#include "pubdebt/scaling.hpp"

namespace pubdebt::io {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::string_view kSurfaceHeader = "variable,t,dt,S,beta,alpha,r_squared,n_countries";
inline constexpr std::string_view kGammaTrendHeader = "year,gamma,log_A,r_squared,n_countries";

[[nodiscard]] std::string surface_csv(const regress::SlopeSurface& surface, std::string_view comment = {});
[[nodiscard]] std::string gamma_trend_csv(const scaling::GammaTrend& trend, std::string_view comment = {});
[[nodiscard]] std::string simpath_csv(const dynamics::SimPath& path, std::string_view comment = {});
[[nodiscard]] std::string budget_csv(const std::vector<double>& debt, std::string_view comment = {});
[[nodiscard]] std::string histogram_csv(const dist::HistogramPdf& pdf, std::string_view comment = {});
[[nodiscard]] std::string zipf_csv(const std::vector<dist::RankedValue>& ranked, std::string_view comment = {});

[[nodiscard]] nlohmann::ordered_json to_json(const dist::GammaFit& fit);
[[nodiscard]] nlohmann::ordered_json to_json(const dist::ZipfFit& fit);
[[nodiscard]] nlohmann::ordered_json to_json(const dist::SummaryStats& stats);

/// 64-bit FNV-1a, rendered as 16 hex digits.
[[nodiscard]] std::string config_hash(std::string_view canonical_config);

/// Truncates and writes; throws
/// Error(MissingFile) when the file cannot be opened.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace pubdebt::io
