#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace simonsim {

/// An n-bit string packed into the low bits of a machine word.
using Bits = std::uint64_t;

/// The single generator type used for every seeded draw in the library.
using Rng = std::mt19937_64;

/// Widest register the word representation supports.
inline constexpr int kMaxWordBits = 31;

[[nodiscard]] constexpr Bits dimension(int n) noexcept { return Bits{1} << n; }

/// Modulo-2 inner product of two bit strings.
[[nodiscard]] constexpr int dot_mod2(Bits a, Bits b) noexcept {
    return std::popcount(a & b) & 1;
}

/// Uniform double in [0, 1) built from the top 53 bits of one engine output.
[[nodiscard]] inline double uniform_draw(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound must be nonzero.
[[nodiscard]] Bits uniform_below(Rng &rng, Bits bound);

/// Lowercase hex, zero-padded to ceil(n / 4) digits.
[[nodiscard]] std::string to_hex(Bits value, int n);

/// Parses a hex string (no prefix) and checks it fits in n bits.
[[nodiscard]] Bits parse_hex(std::string_view text, int n);

/// Bit string as '0'/'1' characters, most significant first.
[[nodiscard]] std::string to_binary(Bits value, int n);

} // namespace simonsim
