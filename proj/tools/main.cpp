// pubdebt: cross-country public debt analysis from the command line.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "pubdebt/io.hpp"
#include "pubdebt/regress.hpp"

namespace {

using pubdebt::cli::RunConfig;

void add_input_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--panel", cfg.panel_path, "Panel CSV")->required();
    sub->add_option("--deflator", cfg.deflator_path, "Deflator CSV (must contain 2000,1.0)")->required();
}

void add_output_option(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
}

void add_synth_options(CLI::App* sub, RunConfig& cfg) {
    auto& s = cfg.synth;
    sub->add_option("--n-countries", s.n_countries, "Number of synthetic countries")->capture_default_str();
    sub->add_option("--synth-years", cfg.synth_years, "Synthetic years, e.g. 1970:2005")->capture_default_str();
    sub->add_option("--alpha", s.alpha, "Per-year intercept of the log process")->capture_default_str();
    sub->add_option("--beta", s.beta, "Per-year convergence speed")->capture_default_str();
    sub->add_option("--sigma", s.sigma, "Std of log noise")->capture_default_str();
    sub->add_option("--seed", s.seed, "Random seed")->capture_default_str();
    sub->add_option("--log-d0-min", s.log_d0_min, "Lower bound of initial log d")->capture_default_str();
    sub->add_option("--log-d0-max", s.log_d0_max, "Upper bound of initial log d")->capture_default_str();
    sub->add_option("--gdp-prefactor", s.gdp_prefactor, "A in g = A d^gamma")->capture_default_str();
    sub->add_option("--gdp-exponent", s.gdp_exponent, "gamma in g = A d^gamma")->capture_default_str();
    sub->add_option("--evolution", cfg.evolution, "annual | anchored")
        ->check(CLI::IsMember({"annual", "anchored"}))
        ->capture_default_str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "unreadable";
    std::ostringstream ss;
    ss << in.rdbuf();
    return pubdebt::io::config_hash(ss.str());
}

// Canonical "name=value" list of a subcommand's options. --out is left out and
// input files enter by content digest, so identical analyses hash identically
// wherever their files live.
std::string canonical_config(const CLI::App* sub) {
    std::vector<std::string> items;
    for (const auto* opt : sub->get_options()) {
        const auto name = opt->get_name();
        if (name == "--out" || name == "--help" || name == "-h") continue;
        std::string value;
        if (opt->count() > 0) {
            for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
            if (name == "--panel" || name == "--deflator") value = file_digest(value);
        } else {
            value = opt->get_default_str();
        }
        items.push_back(name + "=" + value);
    }
    std::sort(items.begin(), items.end());
    std::string out = sub->get_name();
    for (const auto& item : items) out += ";" + item;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace pubdebt;

    CLI::App app{"Cross-country public debt analysis: convergence, distributions, scaling, dynamics"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::vector<std::pair<CLI::App*, std::function<void(const RunConfig&)>>> commands;

    auto* converge = app.add_subcommand("converge", "Convergence slope surfaces for d, g and R");
    add_input_options(converge, cfg);
    add_output_option(converge, cfg);
    converge->add_option("--years", cfg.years, "Initial years, e.g. 1970:2000,2005 (default: all)");
    converge->add_option("--dt-max", cfg.dt_max, "Largest horizon in years")->capture_default_str();
    converge->add_option("--r2-min", cfg.r2_min, "Drop fits with lower R^2")->capture_default_str();
    commands.emplace_back(converge, cli::cmd_converge);

    auto* dist = app.add_subcommand("dist", "Histograms, Zipf ranks, Gamma and Zipf fits for d and R");
    add_input_options(dist, cfg);
    add_output_option(dist, cfg);
    dist->add_option("--bins", cfg.bins, "Equal-width histogram bins over [0, max]")->capture_default_str();
    dist->add_option("--rank-window", cfg.rank_window, "Zipf fit window lo:hi (default: all positive ranks)");
    dist->add_option("--group", cfg.groups, "Also write per income group files (LOW, MEDIUM, HIGH)");
    commands.emplace_back(dist, cli::cmd_dist);

    auto* scaling = app.add_subcommand("scaling", "Annual GDP-debt scaling exponent gamma");
    add_input_options(scaling, cfg);
    add_output_option(scaling, cfg);
    scaling->add_option("--years", cfg.years, "Years to fit (default: all)");
    commands.emplace_back(scaling, cli::cmd_scaling);

    auto* simulate = app.add_subcommand("simulate", "Per-capita debt model path and budget recursion");
    add_output_option(simulate, cfg);
    auto& m = cfg.model;
    m.dt_step = 0.01;
    simulate->add_option("--c", m.c, "Composite borrowing constant")->capture_default_str();
    simulate->add_option("--gamma", m.gamma, "GDP-debt exponent")->capture_default_str();
    simulate->add_option("--r-pop", m.r_pop, "Population growth rate")->capture_default_str();
    simulate->add_option("--d0", m.d0, "Initial per-capita debt")->capture_default_str();
    simulate->add_option("--dt-step", m.dt_step, "Integration step in years")->capture_default_str();
    simulate->add_option("--horizon", m.horizon, "Years to simulate")->capture_default_str();
    simulate->add_option("--debt0", cfg.budget_debt0, "Initial total debt; enables budget_path.csv");
    simulate->add_option("--interest", cfg.budget_interest, "Constant interest rate")->capture_default_str();
    simulate->add_option("--deficit", cfg.budget_deficit, "Constant primary deficit")->capture_default_str();
    simulate->add_option("--budget-horizon", cfg.budget_horizon, "Budget steps")->capture_default_str();
    simulate->add_flag("--synth-panel", cfg.write_synth_panel, "Also write a synthetic panel");
    add_synth_options(simulate, cfg);
    commands.emplace_back(simulate, cli::cmd_simulate);

    auto* threshold = app.add_subcommand("threshold", "Countries above a debt-to-GDP threshold and Gamma tail");
    add_input_options(threshold, cfg);
    add_output_option(threshold, cfg);
    threshold->add_option("--threshold", cfg.threshold, "Debt-to-GDP threshold")->capture_default_str();
    threshold->add_option("--years", cfg.years, "Years to report (default: all)");
    commands.emplace_back(threshold, cli::cmd_threshold);

    auto* synth = app.add_subcommand("synth", "Write a synthetic convergent panel and unit deflator");
    add_output_option(synth, cfg);
    add_synth_options(synth, cfg);
    commands.emplace_back(synth, cli::cmd_synth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kOk : cli::kUsage;
    }

    for (const auto& [sub, run] : commands) {
        if (!sub->parsed()) continue;
        cfg.header = fmt::format("pubdebt {} command={} log={} config={}", io::kVersion, sub->get_name(),
                                 regress::kLogBase, io::config_hash(canonical_config(sub)));
        try {
            run(cfg);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            switch (category(e.kind())) {
                case ErrorCategory::Usage: return cli::kUsage;
                case ErrorCategory::Data: return cli::kData;
                case ErrorCategory::Numerical: return cli::kNumerical;
            }
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return cli::kData;
        }
    }
    return cli::kOk;
}
