#include <doctest.h>

#include "simonsim/baseline.hpp"
#include "simonsim/errors.hpp"
#include "test_support.hpp"

using namespace simonsim;
using simonsim::testing::example_function;
using simonsim::testing::random_function;

TEST_CASE("scan_collision on the n = 2 example") {
    // x = 00 -> 01, x = 01 -> 10, x = 10 -> 10 repeats x = 01.
    CountingOracle oracle(example_function());
    const auto result = scan_collision(oracle);
    CHECK(result.x1 == 0b01);
    CHECK(result.x2 == 0b10);
    CHECK(result.queries == 3);
    CHECK(oracle.queries() == 3);
    CHECK((result.x1 ^ result.x2) == 0b11);
    CHECK(result.strategy == CollisionStrategy::scan);
}

TEST_CASE("scan_collision with n = 1") {
    CountingOracle oracle(generate(1, HiddenShift(1), 8));
    const auto result = scan_collision(oracle);
    CHECK(result.x1 == 0);
    CHECK(result.x2 == 1);
    CHECK(result.queries == 2);
}

TEST_CASE("scan_collision fails on an injective table") {
    CountingOracle oracle(SimonFunction(2, {3, 2, 1, 0}));
    CHECK_THROWS_AS((void)scan_collision(oracle), PromiseViolationError);
}

TEST_CASE("collision searches respect the promise structure") {
    Rng rng(61);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_function(n, rng);
            const Bits r = f.shift()->value();

            CountingOracle scan_oracle(f);
            const auto scan = scan_collision(scan_oracle);
            CHECK(scan.x1 != scan.x2);
            CHECK(f(scan.x1) == f(scan.x2));
            CHECK((scan.x1 ^ scan.x2) == r);
            CHECK(scan.queries <= dimension(n - 1) + 1);
            // The scan stops at the smaller member of the first complete coset.
            CHECK(scan.queries == scan.x2 + 1);

            CountingOracle birthday_oracle(f);
            const auto birthday = birthday_collision(birthday_oracle, rng);
            CHECK(birthday.x1 != birthday.x2);
            CHECK((birthday.x1 ^ birthday.x2) == r);
            CHECK(birthday.queries <= dimension(n - 1) + 1);
            CHECK(birthday.queries == birthday_oracle.queries());
            CHECK(birthday.strategy == CollisionStrategy::birthday);
        }
    }
}

TEST_CASE("birthday_collision on n = 2 needs at most 3 queries") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CountingOracle oracle(example_function());
        Rng rng(seed);
        const auto result = birthday_collision(oracle, rng);
        CHECK(result.queries >= 2);
        CHECK(result.queries <= 3);
    }
}

TEST_CASE("birthday median at n = 10 is within a factor 4 of 2^(n/2)") {
    Rng rng(1010);
    std::vector<double> queries;
    for (int trial = 0; trial < 1000; ++trial) {
        CountingOracle oracle(random_function(10, rng));
        queries.push_back(
            static_cast<double>(birthday_collision(oracle, rng).queries));
    }
    const double m = median(queries);
    CHECK(m >= 32.0 / 4.0);
    CHECK(m <= 32.0 * 4.0);
}

TEST_CASE("printout_term_count is 2^n") {
    CHECK(printout_term_count(1) == 2);
    CHECK(printout_term_count(2) == 4);
    CHECK(printout_term_count(12) == 4096);
    CHECK_THROWS_AS((void)printout_term_count(0), ArgumentError);
}

TEST_CASE("median") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS((void)median({}), ArgumentError);
}

TEST_CASE("build_cost_report composes the n = 2 example") {
    RunReport quantum;
    quantum.n = 2;
    quantum.rounds = 2;
    quantum.oracle_queries = 2;
    quantum.recovered = HiddenShift(0b11);
    quantum.success = true;
    quantum.rank_trajectory = {0, 1};

    CountingOracle oracle(example_function());
    const auto scan = scan_collision(oracle);

    SUBCASE("with birthday trials") {
        std::vector<CollisionResult> trials;
        for (std::uint64_t seed : {1, 2, 3}) {
            CountingOracle b(example_function());
            Rng rng(seed);
            trials.push_back(birthday_collision(b, rng));
        }
        const auto report = build_cost_report(quantum, scan, trials);
        CHECK(report.n == 2);
        CHECK(report.quantum_rounds == 2u);
        CHECK(report.quantum_oracle_queries == 2u);
        CHECK(report.quantum_measurement_units == 8u);
        CHECK(report.classical_scan_queries == 3u);
        CHECK(report.printout_terms == 4);
        CHECK(report.printout_term_bits == 4);
        REQUIRE(report.classical_birthday_queries.has_value());
        CHECK(*report.classical_birthday_queries <= 3.0);
    }
    SUBCASE("without birthday trials") {
        const auto report = build_cost_report(quantum, scan, {});
        CHECK_FALSE(report.classical_birthday_queries.has_value());
        CHECK(report.printout_terms == 4);
    }
    SUBCASE("mismatched n") {
        CountingOracle other(generate(3, HiddenShift(5), 0));
        const auto wrong = scan_collision(other);
        CHECK_THROWS_AS((void)build_cost_report(quantum, wrong, {}),
                        ArgumentError);
        const std::vector<CollisionResult> trials{wrong};
        CHECK_THROWS_AS((void)build_cost_report(quantum, scan, trials),
                        ArgumentError);
    }
}

TEST_CASE("parse_strategy") {
    CHECK(parse_strategy("scan") == CollisionStrategy::scan);
    CHECK(parse_strategy("birthday") == CollisionStrategy::birthday);
    CHECK_THROWS_AS((void)parse_strategy("grover"), ArgumentError);
}
