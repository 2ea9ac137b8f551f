#include <doctest.h>

#include "simonsim/errors.hpp"
#include "simonsim/serialize.hpp"
#include "test_support.hpp"

#include <filesystem>

using namespace simonsim;
using simonsim::testing::example_function;
using simonsim::testing::random_function;

TEST_CASE("function table document layout") {
    const auto doc = function_to_json(generate(2, HiddenShift(3), 1));
    CHECK(doc["n"] == 2);
    CHECK(doc["table"].size() == 4);
    CHECK(doc["r"] == "3");
    const auto wide = function_to_json(generate(6, HiddenShift(0x21), 1));
    CHECK(wide["r"] == "21");
    for (const auto &entry : wide["table"]) {
        CHECK(entry.get<std::string>().size() == 2);
    }
    CHECK_FALSE(function_to_json(example_function()).contains("r"));
}

TEST_CASE("documents survive a text round trip") {
    Rng rng(73);
    for (int n = 1; n <= 10; ++n) {
        const auto f = random_function(n, rng);
        CHECK(function_from_json(Json::parse(dump(function_to_json(f)))) == f);

        const auto report = recover_hidden_shift(f, n % 2 == 0, rng(), 20 * n);
        CHECK(run_report_from_json(Json::parse(dump(run_report_to_json(
                  report)))) == report);

        CountingOracle oracle(f);
        const auto scan = scan_collision(oracle);
        CHECK(collision_from_json(Json::parse(dump(collision_to_json(scan)))) ==
              scan);

        const std::vector<CollisionResult> trials{birthday_collision(oracle, rng)};
        const auto cost = build_cost_report(report, scan, trials);
        CHECK(cost_report_from_json(
                  Json::parse(dump(cost_report_to_json(cost)))) == cost);
    }
}

TEST_CASE("failed run reports serialize recovered as null") {
    RunReport report;
    report.n = 4;
    report.rounds = 1;
    report.oracle_queries = 1;
    report.rank_trajectory = {0};
    const auto doc = run_report_to_json(report);
    CHECK(doc["recovered"].is_null());
    CHECK(run_report_from_json(doc) == report);
}

TEST_CASE("function_from_json rejects malformed documents") {
    CHECK_THROWS_AS((void)function_from_json(Json::parse(R"({"table": []})")),
                    ParseError);
    CHECK_THROWS_AS(
        (void)function_from_json(Json::parse(R"({"n": 2, "table": ["1"]})")),
        ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse(
                        R"({"n": 2, "table": ["1", "2", "2", "x"]})")),
                    ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse(
                        R"({"n": 2, "table": ["1", "2", "2", "4"]})")),
                    ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse(
                        R"({"n": 2, "table": [1, 2, 2, 1]})")),
                    ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse(
                        R"({"n": "2", "table": ["1", "2", "2", "1"]})")),
                    ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse("[1, 2]")),
                    ParseError);
    CHECK_THROWS_AS((void)function_from_json(Json::parse(
                        R"({"n": 2, "table": ["1", "2", "2", "1"], "r": "0"})")),
                    InvalidShiftError);
}

TEST_CASE("read_json_file reports missing and invalid files") {
    const auto dir = std::filesystem::temp_directory_path();
    CHECK_THROWS_AS((void)read_json_file(dir / "simonsim-no-such-file.json"),
                    ParseError);
    const auto bad = dir / "simonsim-bad.json";
    write_text_file(bad, "{not json");
    CHECK_THROWS_AS((void)read_json_file(bad), ParseError);
    std::filesystem::remove(bad);
    CHECK_THROWS_AS(write_text_file(dir / "no-such-dir" / "x.json", "{}"),
                    Error);
}
