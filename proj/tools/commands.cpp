#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "pubdebt/dist.hpp"
#include "pubdebt/io.hpp"
#include "pubdebt/regress.hpp"
#include "pubdebt/scaling.hpp"

namespace pubdebt::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

int to_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::InvalidParameter, "'" + std::string(s) + "' is not an integer");
    }
    return v;
}

panel::Observations load_observations(const RunConfig& cfg) {
    return panel::normalize(panel::ingest_csv(cfg.panel_path, cfg.deflator_path));
}

std::vector<int> years_or_all(const RunConfig& cfg, const panel::Observations& obs) {
    return cfg.years.empty() ? panel::years_of(obs) : parse_years(cfg.years);
}

void ensure_out_dir(const RunConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (!fs::is_directory(cfg.out_dir)) {
        throw Error(ErrorKind::MissingFile, "output directory '" + cfg.out_dir.string() + "' is not usable");
    }
}

void write_json(const RunConfig& cfg, const std::string& name, ordered_json doc) {
    doc["_meta"] = {{"header", cfg.header}};
    io::write_text(cfg.out_dir / name, doc.dump(2) + "\n");
}

dist::RankWindow window_for(const RunConfig& cfg, std::size_t n_positive, std::string_view what) {
    dist::RankWindow w{1, n_positive};
    if (cfg.rank_window.empty()) return w;
    auto colon = cfg.rank_window.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorKind::InvalidParameter, "--rank-window expects lo:hi");
    }
    w.lo = static_cast<std::size_t>(std::max(1, to_int(std::string_view(cfg.rank_window).substr(0, colon))));
    w.hi = static_cast<std::size_t>(std::max(0, to_int(std::string_view(cfg.rank_window).substr(colon + 1))));
    if (w.hi > n_positive) {
        std::cerr << fmt::format("note: rank window for {} clipped to {} positive values\n", what, n_positive);
        w.hi = n_positive;
    }
    return w;
}

struct GroupSelection {
    std::string suffix;  // "" for the full panel, "_LOW" etc. per group
    panel::Observations obs;
};

void write_dist_files(const RunConfig& cfg, const GroupSelection& sel) {
    const auto d = panel::pooled(sel.obs, panel::Field::d);
    const auto R = panel::pooled(sel.obs, panel::Field::R);

    io::write_text(cfg.out_dir / ("pdf_d" + sel.suffix + ".csv"), io::histogram_csv(dist::histogram_pdf(d, cfg.bins), cfg.header));
    io::write_text(cfg.out_dir / ("pdf_R" + sel.suffix + ".csv"), io::histogram_csv(dist::histogram_pdf(R, cfg.bins), cfg.header));

    const auto ranks_d = dist::zipf_ranks(d);
    const auto ranks_R = dist::zipf_ranks(R);
    io::write_text(cfg.out_dir / ("zipf_d" + sel.suffix + ".csv"), io::zipf_csv(ranks_d, cfg.header));
    io::write_text(cfg.out_dir / ("zipf_R" + sel.suffix + ".csv"), io::zipf_csv(ranks_R, cfg.header));

    // Zeros rank last, so the positive values occupy ranks 1..n_positive.
    const auto [d_pos, d_zero] = dist::positive_only(d);
    const auto [R_pos, R_zero] = dist::positive_only(R);
    ordered_json zipf;
    zipf["d"] = io::to_json(dist::fit_zipf_exponent(ranks_d, window_for(cfg, d_pos.size(), "d")));
    zipf["R"] = io::to_json(dist::fit_zipf_exponent(ranks_R, window_for(cfg, R_pos.size(), "R")));
    write_json(cfg, "zipf_fit" + sel.suffix + ".json", std::move(zipf));

    auto gamma = io::to_json(dist::fit_gamma_mle(R_pos));
    gamma["excluded_nonpositive"] = R_zero;
    if (R_zero > 0) {
        std::cerr << fmt::format("note: {} zero-debt observations excluded from the Gamma fit{}\n", R_zero,
                                 sel.suffix);
    }
    write_json(cfg, "gamma_fit" + sel.suffix + ".json", std::move(gamma));

    ordered_json summary;
    summary["d"] = io::to_json(dist::summary_stats(d));
    summary["R"] = io::to_json(dist::summary_stats(R));
    write_json(cfg, "summary" + sel.suffix + ".json", std::move(summary));
}

}  // namespace

std::vector<int> parse_years(const std::string& text) {
    std::set<int> years;
    std::string_view rest(text);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            years.insert(to_int(item));
            continue;
        }
        const int lo = to_int(item.substr(0, colon));
        const int hi = to_int(item.substr(colon + 1));
        if (hi < lo) throw Error(ErrorKind::InvalidParameter, "year range '" + std::string(item) + "' is reversed");
        for (int y = lo; y <= hi; ++y) years.insert(y);
    }
    if (years.empty()) throw Error(ErrorKind::InvalidParameter, "empty year list '" + text + "'");
    return {years.begin(), years.end()};
}

void cmd_converge(const RunConfig& cfg) {
    const auto obs = load_observations(cfg);
    const auto t_list = years_or_all(cfg, obs);
    ensure_out_dir(cfg);
    for (auto variable : {regress::Variable::debt_per_capita, regress::Variable::gdp_per_capita,
                          regress::Variable::ratio_R}) {
        const auto surface = regress::slope_surface(obs, variable, t_list, cfg.dt_max, cfg.r2_min);
        const auto tag = regress::tag(variable);
        std::cerr << fmt::format("{}: {} fits, {} below r2_min, {} cells without enough data\n", tag,
                                 surface.entries.size(), surface.dropped_low_r2, surface.skipped_insufficient);
        io::write_text(cfg.out_dir / fmt::format("surface_{}.csv", tag), io::surface_csv(surface, cfg.header));
    }
}

void cmd_dist(const RunConfig& cfg) {
    const auto obs = load_observations(cfg);
    ensure_out_dir(cfg);
    write_dist_files(cfg, {"", obs});
    for (const auto& name : cfg.groups) {
        auto group = panel::parse_income_group(name);
        if (!group) throw Error(ErrorKind::InvalidParameter, "unknown income group '" + name + "'");
        GroupSelection sel{"_" + std::string(panel::to_string(*group)), panel::filter_income_group(obs, *group)};
        if (sel.obs.empty()) {
            std::cerr << fmt::format("note: income group {} has no observations, files omitted\n",
                                     panel::to_string(*group));
            continue;
        }
        try {
            write_dist_files(cfg, sel);
        } catch (const Error& e) {
            std::cerr << fmt::format("note: income group {} skipped: {}\n", panel::to_string(*group), e.what());
        }
    }
}

void cmd_scaling(const RunConfig& cfg) {
    const auto obs = load_observations(cfg);
    const auto years = years_or_all(cfg, obs);
    ensure_out_dir(cfg);
    const auto trend = scaling::gamma_trend(obs, years);
    std::string comment = cfg.header;
    if (!trend.skipped_years.empty()) {
        std::string list;
        for (int y : trend.skipped_years) list += (list.empty() ? "" : ";") + std::to_string(y);
        std::cerr << "skipped years (insufficient countries): " << list << "\n";
        comment += "\n# skipped_years=" + list;
    }
    io::write_text(cfg.out_dir / "gamma_trend.csv", io::gamma_trend_csv(trend, comment));
}

void cmd_simulate(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    const auto path = dynamics::simulate_model(cfg.model);
    io::write_text(cfg.out_dir / "simpath.csv",
                   io::simpath_csv(path, cfg.header + "\n# terminal=" +
                                             std::string(dynamics::to_string(path.terminal_flag))));
    if (path.terminal_flag != dynamics::Termination::Completed) {
        std::cerr << "note: simulation stopped early: " << dynamics::to_string(path.terminal_flag) << "\n";
    }
    if (cfg.budget_debt0) {
        dynamics::BudgetParams budget{*cfg.budget_debt0, cfg.budget_interest, cfg.budget_deficit,
                                      cfg.budget_horizon};
        io::write_text(cfg.out_dir / "budget_path.csv", io::budget_csv(dynamics::step_debt(budget), cfg.header));
    }
    if (cfg.write_synth_panel) cmd_synth(cfg);
}

void cmd_threshold(const RunConfig& cfg) {
    if (!(cfg.threshold >= 0.0)) throw Error(ErrorKind::InvalidParameter, "--threshold must be >= 0");
    const auto obs = load_observations(cfg);
    const auto years = years_or_all(cfg, obs);
    ensure_out_dir(cfg);

    std::string csv = "# " + cfg.header + "\nyear,n_countries,n_above,countries_above\n";
    std::size_t pooled_n = 0;
    std::size_t pooled_above = 0;
    for (int year : years) {
        std::map<std::string, double> section;
        try {
            section = panel::cross_section(obs, year, panel::Field::R);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::EmptyCrossSection) throw;
        }
        std::string above;
        std::size_t n_above = 0;
        for (const auto& [country, R] : section) {
            if (R > cfg.threshold) {
                above += (above.empty() ? "" : ";") + country;
                ++n_above;
            }
        }
        pooled_n += section.size();
        pooled_above += n_above;
        csv += fmt::format("{},{},{},{}\n", year, section.size(), n_above, above);
    }
    io::write_text(cfg.out_dir / "threshold_by_year.csv", csv);

    const auto [R_pos, R_zero] = dist::positive_only(panel::pooled(obs, panel::Field::R));
    const auto fit = dist::fit_gamma_mle(R_pos);
    ordered_json tail;
    tail["threshold"] = cfg.threshold;
    tail["tail_probability"] = dist::gamma_tail_probability(fit, cfg.threshold);
    tail["empirical_fraction"] = pooled_n ? static_cast<double>(pooled_above) / static_cast<double>(pooled_n) : 0.0;
    tail["gamma"] = io::to_json(fit);
    tail["excluded_nonpositive"] = R_zero;
    write_json(cfg, "threshold_tail.json", std::move(tail));
}

void cmd_synth(const RunConfig& cfg) {
    ensure_out_dir(cfg);
    auto synth = cfg.synth;
    synth.years = parse_years(cfg.synth_years);
    if (cfg.evolution == "annual") {
        synth.evolution = dynamics::Evolution::Annual;
    } else if (cfg.evolution == "anchored") {
        synth.evolution = dynamics::Evolution::Anchored;
    } else {
        throw Error(ErrorKind::InvalidParameter, "--evolution must be annual or anchored");
    }
    const auto p = dynamics::synthetic_convergent_panel(synth);
    io::write_text(cfg.out_dir / "panel.csv", "# " + cfg.header + "\n" + panel::write_panel_csv(p));
    io::write_text(cfg.out_dir / "deflator.csv", "# " + cfg.header + "\n" + panel::write_deflator_csv(p.deflator()));
}

}  // namespace pubdebt::cli
