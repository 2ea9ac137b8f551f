#pragma once

#include "simonsim/bits.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace simonsim {

/// Nonzero n-bit string pairing each argument with its unique collision partner.
class HiddenShift {
  public:
    /// Throws InvalidShiftError when value is zero.
    explicit HiddenShift(Bits value);

    [[nodiscard]] Bits value() const noexcept { return value_; }

    friend bool operator==(HiddenShift, HiddenShift) = default;

  private:
    Bits value_;
};

/// Explicit table f : {0,1}^n -> {0,1}^n, with the generating shift when known.
///
/// Construction checks only the table shape; the two-to-one promise is
/// checked separately by verify_promise().
class SimonFunction {
  public:
    SimonFunction(int n, std::vector<Bits> table,
                  std::optional<HiddenShift> shift = std::nullopt);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] Bits size() const noexcept { return table_.size(); }
    [[nodiscard]] std::span<const Bits> table() const noexcept {
        return table_;
    }
    [[nodiscard]] const std::optional<HiddenShift> &shift() const noexcept {
        return shift_;
    }
    /// Unchecked-count lookup; x must be below 2^n.
    [[nodiscard]] Bits operator()(Bits x) const { return table_[x]; }

    friend bool operator==(const SimonFunction &,
                           const SimonFunction &) = default;

  private:
    int n_;
    std::vector<Bits> table_;
    std::optional<HiddenShift> shift_;
};

/// Random promise-satisfying function: each coset {x, x ^ r} receives a
/// distinct value drawn without replacement from {0,1}^n. Deterministic in
/// (n, r, seed).
[[nodiscard]] SimonFunction generate(int n, HiddenShift r, std::uint64_t seed);

/// Returns the unique shift r with f(x) == f(x') iff x' in {x, x ^ r}.
/// Throws PromiseViolationError naming the first offending argument.
[[nodiscard]] HiddenShift verify_promise(const SimonFunction &f);

/// Number of distinct values in the table.
[[nodiscard]] std::size_t range_size(const SimonFunction &f);

/// Query-counting wrapper; every evaluate() is one oracle call.
class CountingOracle {
  public:
    explicit CountingOracle(SimonFunction inner) : inner_(std::move(inner)) {}

    /// Throws ArgumentError when x >= 2^n.
    Bits evaluate(Bits x);

    [[nodiscard]] std::uint64_t queries() const noexcept { return queries_; }
    void reset() noexcept { queries_ = 0; }
    [[nodiscard]] const SimonFunction &inner() const noexcept { return inner_; }
    [[nodiscard]] int n() const noexcept { return inner_.n(); }

  private:
    SimonFunction inner_;
    std::uint64_t queries_ = 0;
};

} // namespace simonsim
