#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "pubdebt/regress.hpp"
#include "pubdebt/scaling.hpp"
#include "support.hpp"

using namespace pubdebt;
using namespace pubdebt::scaling;
using panel::Observations;

namespace {

std::string code(int i) { return std::string{'C', char('A' + i / 26 % 26), char('A' + i % 26)}; }

Observations power_law_year(int year, double A, double gamma, std::uint64_t seed, int n = 40) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    Observations o;
    for (int i = 0; i < n; ++i) {
        const double d = std::exp(u(rng));
        o.push_back(testing::obs(code(i), year, d, A * std::pow(d, gamma)));
    }
    return o;
}

}  // namespace

TEST_CASE("exact power law") {
    auto f = fit_gdp_debt_scaling(power_law_year(1990, 2.0, 0.9, 1), 1990);
    CHECK(std::abs(f.gamma - 0.9) < 1e-12);
    CHECK(std::abs(f.log_A - std::log(2.0)) < 1e-12);
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.n_countries == 40);
}

TEST_CASE("identity relation") {
    auto f = fit_gdp_debt_scaling(power_law_year(2000, 1.0, 1.0, 2), 2000);
    CHECK(std::abs(f.gamma - 1.0) < 1e-12);
    CHECK(std::abs(f.log_A) < 1e-12);
}

TEST_CASE("rescaling d shifts log_A by -gamma ln c") {
    auto o = power_law_year(1995, 3.0, 0.8, 3);
    for (auto& x : o) x.g *= std::exp(0.1 * std::sin(x.d));  // break exactness
    auto base = fit_gdp_debt_scaling(o, 1995);
    const double c = 17.0;
    for (auto& x : o) x.d *= c;
    auto scaled = fit_gdp_debt_scaling(o, 1995);
    CHECK(std::abs(scaled.gamma - base.gamma) < 1e-10);
    CHECK(std::abs(scaled.log_A - (base.log_A - base.gamma * std::log(c))) < 1e-10);
}

TEST_CASE("zero-debt countries are excluded and counted") {
    auto o = power_law_year(1995, 3.0, 0.8, 3, 5);
    o.push_back(testing::obs("ZZZ", 1995, 0.0, 4.0));
    auto f = fit_gdp_debt_scaling(o, 1995);
    CHECK(f.n_countries == 5);
    CHECK(f.excluded_nonpositive == 1);
    auto few = power_law_year(1995, 3.0, 0.8, 3, 2);
    CHECK_THROWS_AS((void)fit_gdp_debt_scaling(few, 1995), Error);
}

TEST_CASE("gamma trend") {
    Observations o;
    for (int y = 0; y <= 10; ++y) {
        const double gamma = 0.95 - 0.01 * y;  // drifts 0.95 -> 0.85
        auto year = power_law_year(1990 + y, 1.5, gamma, 100 + static_cast<std::uint64_t>(y));
        o.insert(o.end(), year.begin(), year.end());
    }
    SUBCASE("single year equals the direct fit") {
        std::array years{1993};
        auto t = gamma_trend(o, years);
        REQUIRE(t.fits.size() == 1);
        CHECK(t.fits[0].gamma == fit_gdp_debt_scaling(o, 1993).gamma);
    }
    SUBCASE("drift is recovered") {
        std::vector<int> years;
        for (int y = 1990; y <= 2000; ++y) years.push_back(y);
        auto t = gamma_trend(o, years);
        REQUIRE(t.fits.size() == 11);
        for (const auto& f : t.fits) CHECK(std::abs(f.gamma - (0.95 - 0.01 * (f.year - 1990))) < 1e-10);
    }
    SUBCASE("years without data are skipped and listed") {
        std::array years{1989, 1990, 2001};
        auto t = gamma_trend(o, years);
        CHECK(t.fits.size() == 1);
        CHECK(t.skipped_years == std::vector<int>{1989, 2001});
    }
}

TEST_CASE("time-invariant relation gives constant gamma") {
    Observations o;
    for (int y = 0; y < 5; ++y) {
        auto year = power_law_year(2000 + y, 2.5, 0.87, 7 + static_cast<std::uint64_t>(y));
        o.insert(o.end(), year.begin(), year.end());
    }
    std::array years{2000, 2001, 2002, 2003, 2004};
    auto t = gamma_trend(o, years);
    for (const auto& f : t.fits) CHECK(std::abs(f.gamma - t.fits[0].gamma) < 1e-12);
}

TEST_CASE("exponential growth under a power law implies r_g = gamma r_d") {
    const double A = 2.0, gamma = 0.85, r_d = 0.04;
    const int dt = 12;
    auto o = power_law_year(1990, A, gamma, 5);
    Observations later;
    for (const auto& x : o) {
        const double d1 = x.d * std::exp(r_d * dt);
        later.push_back(testing::obs(x.country_code, 1990 + dt, d1, A * std::pow(d1, gamma)));
    }
    o.insert(o.end(), later.begin(), later.end());
    const auto f0 = fit_gdp_debt_scaling(o, 1990);
    const auto f1 = fit_gdp_debt_scaling(o, 1990 + dt);
    CHECK(std::abs(f0.gamma - f1.gamma) < 1e-10);
    const auto g0 = panel::cross_section(o, 1990, panel::Field::g);
    const auto g1 = panel::cross_section(o, 1990 + dt, panel::Field::g);
    for (const auto& [c, g] : g0) {
        const double r_g = regress::growth_rate(g, g1.at(c), dt);
        CHECK(std::abs(r_g - f0.gamma * r_d) < 1e-10);
    }
}
