#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "quivis/catalog.hpp"
#include "quivis/report.hpp"

using namespace quivis;
using nlohmann::ordered_json;

TEST_CASE("round_to_report_precision keeps 12 significant digits", "[report]") {
    CHECK(round_to_report_precision(0.5) == 0.5);
    CHECK(round_to_report_precision(1.0 / 3.0) == 0.333333333333);
    CHECK(round_to_report_precision(1.23456789012349e-7) == Catch::Approx(1.23456789012e-7));
    CHECK(round_to_report_precision(0.0) == 0.0);
}

TEST_CASE("table output prints sub-tolerance floats as exact zero", "[report]") {
    Report report = build_report(catalog::upgraded_mach_zehnder(true), "umz-interference");
    std::string table = report_to_table(report);
    CHECK(table.find("D-upperhorizontal  0\n") != std::string::npos);
    CHECK(table.find("0.5") != std::string::npos);
    CHECK(table.find("absolute-sense which-result: yes") != std::string::npos);
}

TEST_CASE("machine report carries the full field set", "[report]") {
    Report report = build_report(catalog::upgraded_mach_zehnder(true), "umz-interference");
    ordered_json doc = ordered_json::parse(report_to_json(report));
    CHECK(doc["tool"] == kToolName);
    CHECK(doc["scenario"] == "umz-interference");
    CHECK(doc["tolerances"]["atol_matrix"] == 1e-9);
    REQUIRE(doc["probabilities"].size() == 3);
    CHECK(doc["probabilities"][1]["probability"].get<double>() == 0.0);
    REQUIRE(doc["candidates"].size() == 3);
    CHECK(doc["candidates"][0]["verdict"] == "which-result");
    CHECK(doc["candidates"][0]["simplest"] == true);
    CHECK(doc["candidates"][0]["measured"] == "coarsened");
    REQUIRE(doc["candidates"][0]["bijection"].size() == 2);
    CHECK(doc["candidates"][1]["verdict"] == "interference");
    CHECK(doc["candidates"][1]["witness"]["gap"].get<double>() == Catch::Approx(0.5));
    CHECK(doc["candidates"][1]["witness"]["marginal"] == false);
    CHECK(doc["absolute_which_result"] == true);
    // Raw values survive in machine mode even below prob_tol in table mode.
    CHECK(doc["candidates"][0]["commutator_norm"].is_number());
}

TEST_CASE("reports without candidates stay well-formed", "[report]") {
    Experiment base = catalog::mach_zehnder(45.0, true);
    Experiment bare(base.initial(), base.timeline(), base.measured(), {}, base.tolerances());
    Report report = build_report(bare, "bare");
    CHECK(report.candidates.empty());
    CHECK_FALSE(report.absolute_which_result);
    ordered_json doc = ordered_json::parse(report_to_json(report));
    CHECK(doc["candidates"].empty());
    CHECK(report_to_table(report).find("probabilities at t_f:") != std::string::npos);
}

TEST_CASE("witness rendering", "[report]") {
    Report report = build_report(catalog::mach_zehnder(45.0, true), "mz-interference");

    SECTION("json carries the state and amplitudes") {
        ordered_json doc = ordered_json::parse(witness_to_json(report, "B"));
        CHECK(doc["verdict"] == "interference");
        CHECK(doc["witness"]["gap"].get<double>() == Catch::Approx(0.5));
        CHECK(doc["witness"]["initial_state"].size() == 2);
        CHECK(doc["witness"]["alpha"].size() == 2);
    }
    SECTION("table renders the no-witness verdict as a normal line") {
        Report whichway = build_report(catalog::mach_zehnder(45.0, false), "mz-whichway");
        std::string table = witness_to_table(whichway, "B");
        CHECK(table.find("no witness") != std::string::npos);
        ordered_json doc = ordered_json::parse(witness_to_json(whichway, "B"));
        CHECK(doc["witness"].is_null());
    }
    SECTION("unknown candidates raise") {
        REQUIRE_THROWS_AS(witness_to_json(report, "nope"), Error);
    }
}
