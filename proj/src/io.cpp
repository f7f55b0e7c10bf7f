#include "pubdebt/io.hpp"

#include <cstdint>
#include <fstream>

#include <fmt/format.h>

namespace pubdebt::io {

namespace {

std::string start(std::string_view comment, std::string_view header) {
    std::string out;
    if (!comment.empty()) out += fmt::format("# {}\n", comment);
    out += header;
    out += '\n';
    return out;
}

}  // namespace

std::string surface_csv(const regress::SlopeSurface& surface, std::string_view comment) {
    auto out = start(comment, kSurfaceHeader);
    for (const auto& f : surface.entries) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", regress::tag(f.variable), f.t, f.dt, f.S, f.beta,
                           f.alpha, f.r_squared, f.n_countries);
    }
    return out;
}

std::string gamma_trend_csv(const scaling::GammaTrend& trend, std::string_view comment) {
    auto out = start(comment, kGammaTrendHeader);
    for (const auto& f : trend.fits) {
        out += fmt::format("{},{},{},{},{}\n", f.year, f.gamma, f.log_A, f.r_squared, f.n_countries);
    }
    return out;
}

std::string simpath_csv(const dynamics::SimPath& path, std::string_view comment) {
    auto out = start(comment, "t,d");
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        out += fmt::format("{},{}\n", path.times[i], path.d_values[i]);
    }
    return out;
}

std::string budget_csv(const std::vector<double>& debt, std::string_view comment) {
    auto out = start(comment, "t,D");
    for (std::size_t t = 0; t < debt.size(); ++t) out += fmt::format("{},{}\n", t, debt[t]);
    return out;
}

std::string histogram_csv(const dist::HistogramPdf& pdf, std::string_view comment) {
    auto out = start(comment, "bin_lo,bin_hi,density,count");
    for (std::size_t i = 0; i < pdf.bins(); ++i) {
        out += fmt::format("{},{},{},{}\n", pdf.edges[i], pdf.edges[i + 1], pdf.density[i], pdf.counts[i]);
    }
    return out;
}

std::string zipf_csv(const std::vector<dist::RankedValue>& ranked, std::string_view comment) {
    auto out = start(comment, "rank,value");
    for (const auto& rv : ranked) out += fmt::format("{},{}\n", rv.rank, rv.value);
    return out;
}

nlohmann::ordered_json to_json(const dist::GammaFit& fit) {
    return {{"k", fit.k}, {"r_c", fit.r_c}, {"log_likelihood", fit.log_likelihood}, {"n", fit.n}};
}

nlohmann::ordered_json to_json(const dist::ZipfFit& fit) {
    return {{"zeta", fit.zeta},
            {"rank_window", {fit.rank_window.lo, fit.rank_window.hi}},
            {"r_squared", fit.r_squared},
            {"implied_pdf_exponent", fit.implied_pdf_exponent}};
}

nlohmann::ordered_json to_json(const dist::SummaryStats& stats) {
    return {{"mean", stats.mean}, {"std", stats.std}, {"n", stats.n}};
}

std::string config_hash(std::string_view canonical_config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_config) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::MissingFile, "cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error(ErrorKind::MissingFile, "failed writing '" + path.string() + "'");
}

}  // namespace pubdebt::io
