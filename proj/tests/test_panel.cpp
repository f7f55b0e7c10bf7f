#include <doctest.h>

#include <random>

#include "pubdebt/panel.hpp"
#include "support.hpp"

using namespace pubdebt;
using namespace pubdebt::panel;

namespace {

const std::string kHeader = std::string(kPanelHeader) + "\n";

DeflatorSeries deflator_1990() { return DeflatorSeries({{1990, 0.72}, {1995, 0.85}, {2000, 1.0}}); }

ErrorKind ingest_error_kind(const std::string& body) {
    try {
        (void)parse_panel_csv(kHeader + body, deflator_1990());
    } catch (const IngestError& e) {
        return e.kind();
    }
    FAIL("expected IngestError");
    return ErrorKind::MalformedRow;
}

}  // namespace

TEST_CASE("ingest accepts a conforming row") {
    auto p = parse_panel_csv(kHeader + "USA,1990,5.98e12,3.2e12,249623000,High\n", deflator_1990());
    REQUIRE(p.size() == 1);
    const auto& r = p.records()[0];
    CHECK(r.country_code == "USA");
    CHECK(r.year == 1990);
    CHECK(r.gdp_nominal == 5.98e12);
    CHECK(r.debt_nominal == 3.2e12);
    CHECK(r.population == 249623000.0);
    CHECK(r.income_group == IncomeGroup::High);
}

TEST_CASE("ingest rejection kinds") {
    CHECK(ingest_error_kind("SDN,1990,1e10,1e9,2e7,LOW\nSDN,1990,2e10,1e9,2e7,LOW\n") == ErrorKind::DuplicateKey);
    CHECK(ingest_error_kind("SDN,1990,1e10,1e9,0,LOW\n") == ErrorKind::NonPositive);
    CHECK(ingest_error_kind("SDN,1990,0,1e9,1e6,LOW\n") == ErrorKind::NonPositive);
    CHECK(ingest_error_kind("SDN,1990,1e10,-1,1e6,LOW\n") == ErrorKind::NonPositive);
    CHECK(ingest_error_kind("SDN,1990,abc,1e9,1e6,LOW\n") == ErrorKind::MalformedRow);
    CHECK(ingest_error_kind("SDN,1990,1e10,1e9,1e6\n") == ErrorKind::MalformedRow);
    CHECK(ingest_error_kind("SDN,1990,1e10,1e9,1e6,RICH\n") == ErrorKind::MalformedRow);
    CHECK(ingest_error_kind("SDN,1984,1e10,1e9,1e6,LOW\n") == ErrorKind::MissingDeflator);
    CHECK(ingest_error_kind("SDN,1990,1e10,1e9,1e6,LOW\nSDN,1995,1e10,1e9,1e6,HIGH\n") ==
          ErrorKind::InconsistentIncomeGroup);
}

TEST_CASE("rejected rows are all reported with line numbers") {
    const std::string text = "# comment line\n" + kHeader +
                             "AAA,1990,1e10,1e9,1e6,LOW\n"
                             "BBB,1990,1e10,1e9,0,LOW\n"
                             "\n"
                             "AAA,1990,1e10,1e9,1e6,LOW\n";
    try {
        (void)parse_panel_csv(text, deflator_1990(), "panel.csv");
        FAIL("expected IngestError");
    } catch (const IngestError& e) {
        REQUIRE(e.issues().size() == 2);
        CHECK(e.issues()[0].line == 4);
        CHECK(e.issues()[0].kind == ErrorKind::NonPositive);
        CHECK(e.issues()[1].line == 6);
        CHECK(e.issues()[1].kind == ErrorKind::DuplicateKey);
        CHECK(std::string(e.what()).find("panel.csv") != std::string::npos);
    }
}

TEST_CASE("bad header is rejected") {
    CHECK_THROWS_AS((void)parse_panel_csv("a,b,c\n", deflator_1990()), IngestError);
}

TEST_CASE("deflator validation") {
    CHECK_THROWS_AS(DeflatorSeries({{1990, 0.5}}), Error);
    CHECK_THROWS_AS(DeflatorSeries({{2000, 0.99}}), Error);
    CHECK_THROWS_AS(DeflatorSeries({{2000, 1.0}, {1990, 0.0}}), Error);
    auto d = parse_deflator_csv("year,deflator\n1990,0.72\n2000,1.0\n");
    CHECK(d.at(1990) == 0.72);
    CHECK_THROWS_AS((void)parse_deflator_csv("year,deflator\n1990,0.72\n"), Error);
    CHECK_THROWS_AS((void)parse_deflator_csv("year,deflator\n2000,1.0\n2000,1.0\n"), IngestError);
}

TEST_CASE("missing file names the path") {
    testing::TempDir dir;
    testing::write_file(dir / "deflator.csv", "year,deflator\n2000,1\n");
    try {
        (void)ingest_csv(dir / "absent.csv", dir / "deflator.csv");
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingFile);
        CHECK(std::string(e.what()).find("absent.csv") != std::string::npos);
    }
}

TEST_CASE("normalize arithmetic") {
    DeflatorSeries deflator({{1990, 2.0}, {2000, 1.0}});
    Panel p({{"AAA", 1990, 4.0e10, 2.0e10, 1.0e7, IncomeGroup::Low},
             {"BBB", 1990, 3.0e10, 3.0e10, 1.0e7, IncomeGroup::Low},
             {"CCC", 2000, 5.0e10, 1.0e10, 2.0e6, IncomeGroup::High}},
            deflator);
    auto o = normalize(p);
    REQUIRE(o.size() == 3);
    CHECK(o[0].d == 1.0);
    CHECK(o[0].g == 2.0);
    CHECK(o[0].ratio_R == 0.5);
    CHECK(o[1].ratio_R == 1.0);
    // base year: real equals nominal
    CHECK(o[2].d == doctest::Approx(1.0e10 / 2.0e6 / 1000.0).epsilon(1e-15));
    CHECK(o[2].g == doctest::Approx(5.0e10 / 2.0e6 / 1000.0).epsilon(1e-15));
}

TEST_CASE("ratio identity and constant-deflator scaling hold on random panels") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logu(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CountryYearRecord> records;
        for (int i = 0; i < 20; ++i) {
            const double pop = 1e6 * std::exp(logu(rng));
            records.push_back({std::string("C") + char('A' + i / 10) + char('A' + i % 10), 1995,
                               1e10 * std::exp(logu(rng)), 1e9 * std::exp(logu(rng)), pop, IncomeGroup::Medium});
        }
        const double c = std::exp(logu(rng));
        auto unit = normalize(Panel(records, DeflatorSeries({{1995, 1.0}, {2000, 1.0}})));
        auto scaled = normalize(Panel(records, DeflatorSeries({{1995, c}, {2000, 1.0}})));
        for (std::size_t i = 0; i < unit.size(); ++i) {
            CHECK(testing::rel_close(unit[i].ratio_R * unit[i].g, unit[i].d, 1e-12));
            CHECK(testing::rel_close(scaled[i].d, unit[i].d / c, 1e-12));
            CHECK(testing::rel_close(scaled[i].g, unit[i].g / c, 1e-12));
            CHECK(scaled[i].ratio_R == unit[i].ratio_R);
        }
    }
}

TEST_CASE("cross_section") {
    Observations o{testing::obs("CCC", 2000, 1, 2), testing::obs("AAA", 2000, 0, 4),
                   testing::obs("BBB", 2001, 3, 3)};
    auto cs = cross_section(o, 2000, Field::R);
    REQUIRE(cs.size() == 2);
    CHECK(cs.begin()->first == "AAA");
    CHECK(cs.at("AAA") == 0.0);
    CHECK(cs.at("CCC") == 0.5);
    CHECK_THROWS_AS((void)cross_section(o, 1999, Field::d), Error);
    try {
        (void)cross_section(o, 1999, Field::d);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyCrossSection);
    }
}

TEST_CASE("income group filter") {
    std::vector<CountryYearRecord> records{{"AAA", 2000, 1e9, 1e8, 1e6, IncomeGroup::High},
                                           {"BBB", 2000, 1e9, 1e8, 1e6, IncomeGroup::Low},
                                           {"CCC", 2000, 1e9, 2e8, 1e6, IncomeGroup::High}};
    Panel p(records, DeflatorSeries({{2000, 1.0}}));
    auto o = normalize(p);
    CHECK(filter_income_group(filter_income_group(o, IncomeGroup::High), IncomeGroup::Low).empty());
    auto high = filter_income_group(o, IncomeGroup::High);
    REQUIRE(high.size() == 2);
    CHECK(high[0].country_code == "AAA");
    CHECK(high[1].country_code == "CCC");

    // filter then normalize == normalize then filter
    auto filtered_first = normalize(Panel(filter_income_group(records, IncomeGroup::High), p.deflator()));
    REQUIRE(filtered_first.size() == high.size());
    for (std::size_t i = 0; i < high.size(); ++i) {
        CHECK(filtered_first[i].country_code == high[i].country_code);
        CHECK(filtered_first[i].d == high[i].d);
        CHECK(filtered_first[i].ratio_R == high[i].ratio_R);
    }
}

TEST_CASE("ingestion is deterministic and round-trips through CSV") {
    const std::string text = kHeader +
                             "ZZZ,1995,1.2345678901234567e11,3.3e10,12345678,medium\n"
                             "AAA,1990,5.98e12,3.2e12,249623000,HIGH\n"
                             "AAA,1995,7.1e12,4.9e12,266000000,HIGH\n";
    auto a = parse_panel_csv(text, deflator_1990());
    auto b = parse_panel_csv(text, deflator_1990());
    CHECK(write_panel_csv(a) == write_panel_csv(b));
    CHECK(a.records()[0].country_code == "ZZZ");  // file order kept
    auto c = parse_panel_csv(write_panel_csv(a), parse_deflator_csv(write_deflator_csv(a.deflator())));
    CHECK(write_panel_csv(c) == write_panel_csv(a));
    CHECK(c.records()[0].gdp_nominal == 1.2345678901234567e11);
}
