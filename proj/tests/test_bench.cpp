#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "hbac/bench.hpp"

using namespace hbac;

TEST_CASE("table ids parse") {
    CHECK(parse_table_id("t1") == TableId::T1);
    CHECK(parse_table_id("T10") == TableId::T10);
    CHECK(parse_table_id("f3") == TableId::F3);
    CHECK_THROWS_AS(parse_table_id("T11"), std::invalid_argument);
}

TEST_CASE("five-spin table rows land on the published values") {
    const auto data = reproduce_table(TableId::T1);
    REQUIRE(data.rows.size() == 10);
    for (const auto& row : data.rows) {
        CAPTURE(row.algorithm);
        CHECK(row.rel_dev < 1e-2);
        if (row.algorithm != "PPA") CHECK(row.resets == row.paper_resets);
    }
    const auto& fourpac = data.rows[4];
    CHECK(fourpac.algorithm == "4PAC");
    CHECK(fourpac.bias == doctest::Approx(3.75).epsilon(5e-3));
    CHECK(fourpac.resets == 101);
    CHECK(data.convention.find("zero-bias") != std::string::npos);
}

TEST_CASE("nine-spin table spot row") {
    const auto data = reproduce_table(TableId::T3);
    bool found = false;
    for (const auto& row : data.rows) {
        if (row.algorithm == "3Fib") {
            found = true;
            CHECK(row.bias == doctest::Approx(16.9).epsilon(5e-3));
            CHECK(row.resets == 32768);
        }
    }
    CHECK(found);
}

TEST_CASE("purification table rows") {
    const auto data = reproduce_table(TableId::T6);
    REQUIRE(data.rows.size() == 5);
    for (const auto& row : data.rows) {
        CAPTURE(row.algorithm);
        CHECK(row.n == row.paper_n);
        // rows qualify once the bias rounds to 0.9999 at four decimals
        // (the published 3Fib entry is 0.999877)
        CHECK(row.bias >= 0.99985);
    }
    const auto& threefib = data.rows[3];
    CHECK(threefib.algorithm == "3Fib");
    CHECK(threefib.n == 11);
    CHECK(threefib.resets == 524288);
    CHECK(threefib.note.find("gate_level_bias") != std::string::npos);
}

TEST_CASE("search_resources") {
    SUBCASE("2PAC from 10% polarization to 60%") {
        SearchRequest req;
        req.family = Family::MPac;
        req.m = 2;
        req.eps0 = 0.1;
        req.target = 0.6;
        req.target_in_units = false;
        const auto res = search_resources(req);
        CHECK(res.reachable);
        CHECK(res.n == 9);
        CHECK(res.resets == 937);
        CHECK(res.bias == doctest::Approx(0.76).epsilon(1e-2));
    }
    SUBCASE("PAC2 to 0.9999") {
        SearchRequest req;
        req.family = Family::Pac2;
        req.eps0 = 0.1;
        req.target = 0.9999;
        req.target_in_units = false;
        const auto res = search_resources(req);
        CHECK(res.reachable);
        CHECK(res.n == 19);
        CHECK(res.resets == 39365);
        CHECK(res.bias == doctest::Approx(0.999996).epsilon(1e-5));
    }
    SUBCASE("linear-units target") {
        SearchRequest req;
        req.family = Family::MFib;
        req.m = 3;
        req.target = 3.0;
        req.target_in_units = true;
        const auto res = search_resources(req);
        CHECK(res.reachable);
        CHECK(res.n == 5);
        CHECK(res.resets == 128);
    }
    SUBCASE("targets at or below the bath bias are rejected") {
        SearchRequest req;
        req.family = Family::MPac;
        req.eps0 = 0.1;
        req.target = 0.05;
        req.target_in_units = false;
        CHECK_THROWS_AS(search_resources(req), std::invalid_argument);
    }
    SUBCASE("unreachable within max_spins") {
        SearchRequest req;
        req.family = Family::Pac2;
        req.target = 1000.0;
        req.target_in_units = true;
        req.max_spins = 9;
        CHECK_FALSE(search_resources(req).reachable);
    }
}

TEST_CASE("fixed-target table: practicable rows are exact") {
    const auto data = reproduce_table(TableId::T8);
    for (const auto& row : data.rows) {
        CAPTURE(row.algorithm);
        if (row.algorithm == "PPA") continue;  // see the decisions notes
        CHECK(row.n == row.paper_n);
        CHECK(row.resets == row.paper_resets);
    }
}

TEST_CASE("curves") {
    SUBCASE("6PAC from 10% exceeds one-half at level three") {
        const auto pts = emit_curve(Family::MPac, 6, 0.1, 3, Regime::Exact);
        CHECK(pts.back().j == 3);
        CHECK(pts.back().n == 7);
        CHECK(pts.back().value > 0.5);
    }
    SUBCASE("the asymptotic curve dominates and 6PAC tracks it closely") {
        const auto curve6 = emit_curve(Family::MPac, 6, 0.01, 8, Regime::Exact);
        const auto curvei =
            emit_curve(Family::InftyPac, 0, 0.01, 8, Regime::Exact);
        double max_gap = 0.0;
        for (size_t i = 0; i < curve6.size(); ++i) {
            const double six = curve6[i].value;
            const double inf = curvei[i].value;
            CHECK(inf >= six - 1e-15);
            max_gap = std::max(max_gap, (inf - six) / inf);
        }
        // the two level recurrences separate most around half polarization
        CHECK(max_gap == doctest::Approx(0.03513).epsilon(0.02));
    }
    SUBCASE("linear factors") {
        const auto pts = emit_curve(Family::MPac, 4, 1e-5, 5, Regime::Linear);
        CHECK(pts.back().value == doctest::Approx(27.3).epsilon(5e-3));
    }
}

TEST_CASE("writers emit the pinned schema") {
    const auto data = reproduce_table(TableId::T1);

    std::ostringstream csv;
    write_csv(data, csv);
    CHECK(csv.str().rfind("algorithm,n,resets,bias,paper_value,rel_dev", 0) ==
          0);

    std::ostringstream js;
    write_json(data, js);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["table"] == "T1");
    REQUIRE(doc["rows"].is_array());
    const auto& row = doc["rows"][0];
    for (const char* key :
         {"algorithm", "n", "resets", "bias", "paper_value", "rel_dev"})
        CHECK(row.contains(key));

    // deterministic output for identical requests
    std::ostringstream js2;
    write_json(reproduce_table(TableId::T1), js2);
    CHECK(js.str() == js2.str());
}
