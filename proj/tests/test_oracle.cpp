#include <doctest.h>

#include "simonsim/errors.hpp"
#include "simonsim/oracle.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace simonsim;
using simonsim::testing::example_function;

TEST_CASE("HiddenShift rejects zero") {
    CHECK_THROWS_AS(HiddenShift(0), InvalidShiftError);
    CHECK(HiddenShift(3).value() == 3);
}

TEST_CASE("generate: n = 1 gives a constant table") {
    const auto f = generate(1, HiddenShift(1), 42);
    REQUIRE(f.size() == 2);
    CHECK(f(0) == f(1));
    CHECK(f.shift() == HiddenShift(1));
}

TEST_CASE("generate: n = 2, r = 11 pairs {00,11} and {01,10}") {
    const auto f = generate(2, HiddenShift(0b11), 9);
    CHECK(f(0b00) == f(0b11));
    CHECK(f(0b01) == f(0b10));
    CHECK(f(0b00) != f(0b01));
    CHECK(verify_promise(f) == HiddenShift(0b11));
}

TEST_CASE("generate is deterministic in (n, r, seed)") {
    CHECK(generate(6, HiddenShift(0x2d), 123) ==
          generate(6, HiddenShift(0x2d), 123));
    CHECK(generate(6, HiddenShift(0x2d), 123).table()[0] ==
          generate(6, HiddenShift(0x2d), 123).table()[0]);
    CHECK_FALSE(generate(8, HiddenShift(0x2d), 123) ==
                generate(8, HiddenShift(0x2d), 124));
}

TEST_CASE("generate rejects shifts that do not fit") {
    CHECK_THROWS_AS((void)generate(2, HiddenShift(4), 0), InvalidShiftError);
    CHECK_THROWS_AS((void)generate(0, HiddenShift(1), 0), ArgumentError);
}

TEST_CASE("verify_promise on the worked example") {
    CHECK(verify_promise(example_function()) == HiddenShift(0b11));
}

TEST_CASE("verify_promise rejects an injective table") {
    const SimonFunction f(2, {0b00, 0b01, 0b10, 0b11});
    try {
        (void)verify_promise(f);
        FAIL("expected a promise violation");
    } catch (const PromiseViolationError &e) {
        CHECK(e.offending_x() == 0);
    }
}

TEST_CASE("verify_promise rejects a constant table") {
    const SimonFunction f(2, {0, 0, 0, 0});
    try {
        (void)verify_promise(f);
        FAIL("expected a promise violation");
    } catch (const PromiseViolationError &e) {
        CHECK(e.offending_x() == 0);
    }
}

TEST_CASE("verify_promise rejects pairs at different shifts") {
    // 0<->1 at shift 001, then 2<->4 at shift 110.
    const SimonFunction f(3, {0, 0, 1, 2, 1, 2, 3, 3});
    try {
        (void)verify_promise(f);
        FAIL("expected a promise violation");
    } catch (const PromiseViolationError &e) {
        CHECK(e.offending_x() == 2);
    }
}

TEST_CASE("verify_promise names the first argument without a partner") {
    // x = 1 is alone; x = 0 pairs with 2.
    const SimonFunction f(2, {0, 1, 0, 2});
    try {
        (void)verify_promise(f);
        FAIL("expected a promise violation");
    } catch (const PromiseViolationError &e) {
        CHECK(e.offending_x() == 1);
    }
}

TEST_CASE("verify_promise rejects a declared shift that disagrees") {
    const SimonFunction f(2, {0b01, 0b10, 0b10, 0b01}, HiddenShift(0b01));
    CHECK_THROWS_AS((void)verify_promise(f), PromiseViolationError);
}

TEST_CASE("SimonFunction checks the table shape") {
    CHECK_THROWS_AS(SimonFunction(2, {0, 0, 1}), DimensionError);
    CHECK_THROWS_AS(SimonFunction(2, {0, 0, 1, 4}), ArgumentError);
    CHECK_THROWS_AS(SimonFunction(0, {}), ArgumentError);
}

TEST_CASE("generated functions satisfy the promise for n <= 10") {
    Rng rng(2024);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const Bits r = 1 + uniform_below(rng, dimension(n) - 1);
            const std::uint64_t seed = rng();
            const auto f = generate(n, HiddenShift(r), seed);
            CHECK(verify_promise(f) == HiddenShift(r));
            CHECK(range_size(f) == dimension(n - 1));

            // Each value's preimage is exactly one coset {x, x ^ r}.
            std::map<Bits, std::set<Bits>> preimages;
            for (Bits x = 0; x < f.size(); ++x) {
                preimages[f(x)].insert(x);
            }
            for (const auto &[value, xs] : preimages) {
                REQUIRE(xs.size() == 2);
                CHECK((*xs.begin() ^ *xs.rbegin()) == r);
            }
        }
    }
}

TEST_CASE("generated functions: exhaustive pair check for small n") {
    Rng rng(77);
    for (int n = 1; n <= 7; ++n) {
        const auto f = simonsim::testing::random_function(n, rng);
        const Bits r = f.shift()->value();
        for (Bits x = 0; x < f.size(); ++x) {
            for (Bits xp = 0; xp < f.size(); ++xp) {
                const bool partners = xp == x || xp == (x ^ r);
                CHECK((f(x) == f(xp)) == partners);
            }
        }
    }
}

TEST_CASE("CountingOracle counts every evaluation") {
    CountingOracle oracle(example_function());
    CHECK(oracle.queries() == 0);
    CHECK(oracle.evaluate(0b10) == 0b10);
    CHECK(oracle.queries() == 1);
    (void)oracle.evaluate(0b00);
    CHECK(oracle.queries() == 2);
    CHECK_THROWS_AS((void)oracle.evaluate(4), ArgumentError);
    CHECK(oracle.queries() == 2);
    oracle.reset();
    CHECK(oracle.queries() == 0);
}
