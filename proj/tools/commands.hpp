#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pubdebt/dynamics.hpp"
#include "pubdebt/panel.hpp"

namespace pubdebt::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

/// Parameters shared by every subcommand after parsing.
struct RunConfig {
    std::filesystem::path panel_path;
    std::filesystem::path deflator_path;
    std::filesystem::path out_dir = ".";
    std::string years;  // "1970:2005,2010" style; empty = all years in the panel
    int dt_max = 15;
    double r2_min = 0.0;
    std::size_t bins = 50;
    std::string rank_window;  // "lo:hi"; empty = all positive ranks
    std::vector<std::string> groups;
    double threshold = 0.6;

    dynamics::ModelParams model;
    std::optional<double> budget_debt0;
    double budget_interest = 0.0;
    double budget_deficit = 0.0;
    int budget_horizon = 50;
    bool write_synth_panel = false;

    dynamics::SyntheticConfig synth;
    std::string synth_years = "1970:2005";
    std::string evolution = "annual";

    /// First line of every output file (without '#').
    std::string header;
};

/// Parses "1970:1975,1980" into {1970, ..., 1975, 1980}. Throws Error(InvalidParameter).
[[nodiscard]] std::vector<int> parse_years(const std::string& text);

void cmd_converge(const RunConfig& config);
void cmd_dist(const RunConfig& config);
void cmd_scaling(const RunConfig& config);
void cmd_simulate(const RunConfig& config);
void cmd_threshold(const RunConfig& config);
void cmd_synth(const RunConfig& config);

}  // namespace pubdebt::cli
