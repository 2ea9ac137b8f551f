#include "simonsim/bits.hpp"

#include "simonsim/errors.hpp"

#include <charconv>
#include <limits>

namespace simonsim {

Bits uniform_below(Rng &rng, Bits bound) {
    if (bound == 0) {
        throw ArgumentError("uniform_below: bound must be nonzero");
    }
    // Largest multiple of bound representable; draws above it are rejected.
    const Bits limit = std::numeric_limits<Bits>::max() -
                       std::numeric_limits<Bits>::max() % bound;
    Bits draw = rng();
    while (draw >= limit) {
        draw = rng();
    }
    return draw % bound;
}

std::string to_hex(Bits value, int n) {
    const int digits = n <= 0 ? 1 : (n + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    static constexpr char kDigits[] = "0123456789abcdef";
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kDigits[value & 0xF];
        value >>= 4;
    }
    return out;
}

Bits parse_hex(std::string_view text, int n) {
    if (text.empty()) {
        throw ParseError("empty hex string");
    }
    Bits value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value, 16);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("invalid hex string '" + std::string(text) + "'");
    }
    if (n < 64 && value >= dimension(n)) {
        throw ParseError("hex value '" + std::string(text) + "' exceeds " +
                         std::to_string(n) + " bits");
    }
    return value;
}

std::string to_binary(Bits value, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if ((value >> i) & 1U) {
            out[static_cast<std::size_t>(n - 1 - i)] = '1';
        }
    }
    return out;
}

} // namespace simonsim
