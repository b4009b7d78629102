#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "panelkit/csv.hpp"
#include "panelkit/transforms.hpp"
#include "panelkit/validate.hpp"

using namespace panelkit;

namespace {

const char* kCompleteCsv =
    "entity,period,x\n"
    "a,2008,1.5\n"
    "a,2009,2.5\n"
    "b,2008,3.5\n"
    "b,2009,4.5\n";

PanelDataset complete_17x9() {
    std::ostringstream csv;
    csv << "entity,period,z,w,v\n";
    for (int g = 1; g <= 17; ++g) {
        for (int year = 2008; year <= 2016; ++year) {
            csv << "bank" << (g < 10 ? "0" : "") << g << ',' << year << ','
                << g * 0.5 + year % 7 + 0.25 * ((g * year) % 11) << ',' << (year - 2008) * 1.1 + g
                << ',' << g + year % 5 << '\n';
        }
    }
    return load_panel_text(csv.str());
}

}  // namespace

TEST_CASE("complete rectangle loads with no missing cells") {
    PanelDataset p = load_panel_text(kCompleteCsv);
    CHECK(p.n_entities() == 2);
    CHECK(p.n_periods() == 2);
    CHECK(p.variable_names() == std::vector<std::string>{"x"});
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t t = 0; t < 2; ++t) CHECK(p.is_present("x", i, t));
    }
    CHECK(p.value("x", 0, 0) == 1.5);
    CHECK(p.value("x", 1, 1) == 4.5);
}

TEST_CASE("period gaps materialize as all-missing columns") {
    PanelDataset p = load_panel_text(
        "entity,period,x\n"
        "a,2008,1\n"
        "a,2010,2\n");
    CHECK(p.n_periods() == 3);
    CHECK(p.periods() == std::vector<int>{2008, 2009, 2010});
    CHECK(p.is_present("x", 0, 0));
    CHECK(!p.is_present("x", 0, 1));
    CHECK(p.is_present("x", 0, 2));
}

TEST_CASE("load is invariant to row permutation") {
    const char* shuffled =
        "entity,period,x\n"
        "b,2009,4.5\n"
        "a,2008,1.5\n"
        "b,2008,3.5\n"
        "a,2009,2.5\n";
    CHECK(load_panel_text(kCompleteCsv) == load_panel_text(shuffled));
}

TEST_CASE("row permutation property on random panels") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::string> rows;
        for (int g = 0; g < 4; ++g) {
            for (int t = 0; t < 5; ++t) {
                if (rng() % 4 == 0) continue;  // random missing rows
                std::ostringstream line;
                line << "e" << g << ',' << 2000 + t << ',' << u(rng) << ','
                     << (rng() % 3 == 0 ? "NA" : std::to_string(u(rng)));
                rows.push_back(line.str());
            }
        }
        if (rows.empty()) continue;
        std::string header = "entity,period,a,b\n";
        std::string forward = header, backward = header;
        for (const auto& r : rows) forward += r + "\n";
        std::shuffle(rows.begin(), rows.end(), rng);
        for (const auto& r : rows) backward += r + "\n";
        CHECK(load_panel_text(forward) == load_panel_text(backward));
    }
}

TEST_CASE("duplicate pair, bad token, empty input are rejected") {
    CHECK_THROWS_WITH_AS(load_panel_text("entity,period,x\na,2008,1\na,2008,2\n"),
                         doctest::Contains("duplicate (entity, period) pair: (a, 2008)"),
                         DataError);
    CHECK_THROWS_WITH_AS(load_panel_text("entity,period,x\na,2008,oops\n"),
                         doctest::Contains("non-numeric token"), DataError);
    CHECK_THROWS_AS(load_panel_text(""), DataError);
    CHECK_THROWS_AS(load_panel_text("entity,period,x\n"), DataError);
}

TEST_CASE("csv round trip reproduces the dataset cell for cell") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    PanelDataset p = load_panel_text(
        "entity,period,x,y\n"
        "a,2008,0.1,\n"
        "a,2010,NA,3\n"
        "b,2009,-2.75,0.333\n");
    // Awkward doubles survive the trip too.
    p.set("x", 0, 1, 0.1 + 0.2);
    p.set("y", 1, 2, std::nextafter(1.0, 2.0));
    for (int k = 0; k < 50; ++k) {
        p.set("x", rng() % 2, rng() % 3, u(rng) / 3.0);
    }
    PanelDataset back = load_panel_text(panel_to_csv(p));
    CHECK(p == back);
    // Byte-stable: emitting again gives identical bytes.
    CHECK(panel_to_csv(p) == panel_to_csv(back));
}

TEST_CASE("log_return on constant and simple ratios") {
    Series s(3);
    s.set(0, 100.0);
    s.set(1, 100.0);
    s.set(2, 100.0);
    Series r = log_return(s);
    CHECK(!r.has(0));
    CHECK(r.at(1) == 0.0);
    CHECK(r.at(2) == 0.0);

    Series up(2);
    up.set(0, 100.0);
    up.set(1, 110.0);
    CHECK(log_return(up).at(1) == doctest::Approx(0.09531).epsilon(1e-4));

    Series down(2);
    down.set(0, 100.0);
    down.set(1, 80.0);
    CHECK(log_return(down).at(1) == doctest::Approx(-0.22314).epsilon(1e-4));
}

TEST_CASE("log_return: missing neighbors propagate, non-positive rejected") {
    Series s(4);
    s.set(0, 1.0);
    s.set(2, 2.0);
    s.set(3, 4.0);
    Series r = log_return(s);
    CHECK(!r.has(0));
    CHECK(!r.has(1));
    CHECK(!r.has(2));  // previous value missing
    CHECK(r.at(3) == doctest::Approx(std::log(2.0)));

    Series bad(2);
    bad.set(0, 1.0);
    bad.set(1, -1.0);
    std::vector<int> periods{2008, 2009};
    CHECK_THROWS_WITH_AS(log_return(bad, periods), doctest::Contains("2009"), DataError);
}

TEST_CASE("log_return then cumulated exponential recovers the series") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    Series s(40);
    for (std::size_t t = 0; t < 40; ++t) s.set(t, u(rng) * 50.0);
    Series r = log_return(s);
    double level = s.at(0);
    for (std::size_t t = 1; t < 40; ++t) {
        level *= std::exp(r.at(t));
        CHECK(level == doctest::Approx(s.at(t)).epsilon(1e-12));
    }
}

TEST_CASE("natural_log basics") {
    Series ones(2);
    ones.set(0, 1.0);
    ones.set(1, 1.0);
    Series l = natural_log(ones);
    CHECK(l.at(0) == 0.0);
    CHECK(l.at(1) == 0.0);

    Series e(1);
    e.set(0, std::exp(1.0));
    CHECK(natural_log(e).at(0) == doctest::Approx(1.0));

    Series hundred(1);
    hundred.set(0, 100.0);
    CHECK(natural_log(hundred).at(0) == doctest::Approx(4.60517).epsilon(1e-5));

    Series zero(1);
    zero.set(0, 0.0);
    CHECK_THROWS_AS(natural_log(zero), DataError);
}

TEST_CASE("validate_panel: complete 17x9 ARDL(1,1) gives usable T of 7") {
    PanelDataset p = complete_17x9();
    pmg::ModelSpec spec;
    spec.dependent = "z";
    spec.long_run = {"w"};
    ValidationReport report = validate_panel(p, spec);
    REQUIRE(report.entities.size() == 17);
    for (const auto& e : report.entities) {
        CHECK(e.usable_rows == 7);
        CHECK(e.usable);
    }
}

TEST_CASE("validate_panel flags an entity with two observations as unusable") {
    PanelDataset p = load_panel_text(
        "entity,period,z,w\n"
        "a,2008,1,2\n"
        "a,2009,2,1\n"
        "a,2010,3,4\n"
        "a,2011,2,2\n"
        "a,2012,5,3\n"
        "a,2013,4,5\n"
        "a,2014,6,4\n"
        "b,2008,1,1\n"
        "b,2009,2,2\n");
    pmg::ModelSpec spec;
    spec.dependent = "z";
    spec.long_run = {"w"};
    ValidationReport report = validate_panel(p, spec);
    CHECK(report.entities[0].usable);
    CHECK(!report.entities[1].usable);
    CHECK(report.entities[1].usable_rows == 0);
    bool warned = false;
    for (const auto& w : report.warnings) warned = warned || w.find("'b'") != std::string::npos;
    CHECK(warned);
}

TEST_CASE("validate_panel warns on cross-section invariant regressors") {
    std::ostringstream csv;
    csv << "entity,period,z,gdp\n";
    for (int g = 0; g < 3; ++g) {
        for (int t = 0; t < 8; ++t) {
            csv << "e" << g << ',' << 2000 + t << ',' << g + t * 0.7 + (g * t % 3) << ','
                << 1.5 * t << '\n';  // gdp identical across entities
        }
    }
    PanelDataset p = load_panel_text(csv.str());
    CHECK(p.cross_section_invariant("gdp"));
    CHECK(!p.cross_section_invariant("z"));
    pmg::ModelSpec spec;
    spec.dependent = "z";
    spec.long_run = {"gdp"};
    ValidationReport report = validate_panel(p, spec);
    bool warned = false;
    for (const auto& w : report.warnings) {
        warned = warned || w.find("cross-sectional variation") != std::string::npos;
    }
    CHECK(warned);
}

TEST_CASE("without_entity drops exactly one entity") {
    PanelDataset p = load_panel_text(kCompleteCsv);
    PanelDataset q = p.without_entity("a");
    CHECK(q.n_entities() == 1);
    CHECK(q.entities()[0] == "b");
    CHECK(q.value("x", 0, 0) == 3.5);
    CHECK_THROWS_AS(p.without_entity("zz"), UsageError);
}
