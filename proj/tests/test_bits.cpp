#include <doctest.h>

#include "simonsim/bits.hpp"
#include "simonsim/errors.hpp"

using namespace simonsim;

TEST_CASE("hex strings are lowercase and padded to ceil(n/4) digits") {
    CHECK(to_hex(0x3, 2) == "3");
    CHECK(to_hex(0x3, 5) == "03");
    CHECK(to_hex(0xab, 8) == "ab");
    CHECK(to_hex(0xabc, 12) == "abc");
    CHECK(to_hex(0x1, 9) == "001");
}

TEST_CASE("parse_hex accepts padded values and rejects junk") {
    CHECK(parse_hex("03", 5) == 3);
    CHECK(parse_hex("ff", 8) == 255);
    CHECK_THROWS_AS((void)parse_hex("", 4), ParseError);
    CHECK_THROWS_AS((void)parse_hex("0x1", 4), ParseError);
    CHECK_THROWS_AS((void)parse_hex("g", 4), ParseError);
    CHECK_THROWS_AS((void)parse_hex("10", 4), ParseError);
}

TEST_CASE("hex round-trips for every width") {
    Rng rng(11);
    for (int n = 1; n <= 16; ++n) {
        for (int i = 0; i < 50; ++i) {
            const Bits v = uniform_below(rng, dimension(n));
            CHECK(parse_hex(to_hex(v, n), n) == v);
        }
    }
}

TEST_CASE("dot_mod2 is the parity of the bitwise AND") {
    CHECK(dot_mod2(0b11, 0b11) == 0);
    CHECK(dot_mod2(0b11, 0b01) == 1);
    CHECK(dot_mod2(0b101, 0b111) == 0);
    CHECK(dot_mod2(0, 0xffff) == 0);
}

TEST_CASE("uniform_draw and uniform_below stay in range") {
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double d = uniform_draw(rng);
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
        CHECK(uniform_below(rng, 7) < 7);
    }
    CHECK_THROWS_AS((void)uniform_below(rng, 0), ArgumentError);
}

TEST_CASE("to_binary writes the most significant bit first") {
    CHECK(to_binary(0b10, 2) == "10");
    CHECK(to_binary(0b1, 3) == "001");
}
