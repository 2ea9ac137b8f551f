#pragma once

#include "simonsim/bits.hpp"
#include "simonsim/oracle.hpp"
#include "simonsim/pipeline.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace simonsim {

enum class CollisionStrategy { scan, birthday };

[[nodiscard]] std::string_view to_string(CollisionStrategy strategy) noexcept;
/// Throws ArgumentError for names other than "scan" and "birthday".
[[nodiscard]] CollisionStrategy parse_strategy(std::string_view name);

/// Two distinct arguments with equal function values, found classically.
struct CollisionResult {
    int n = 0;
    Bits x1 = 0;
    Bits x2 = 0;
    std::uint64_t queries = 0;
    CollisionStrategy strategy = CollisionStrategy::scan;

    friend bool operator==(const CollisionResult &,
                           const CollisionResult &) = default;
};

/// Query the oracle at x = 0, 1, 2, ... until a value repeats.
/// Throws PromiseViolationError if every input is distinct.
[[nodiscard]] CollisionResult scan_collision(CountingOracle &oracle);

/// Uniform random arguments, skipping ones already queried, until two distinct
/// arguments share a value. Only fresh arguments reach the oracle.
[[nodiscard]] CollisionResult birthday_collision(CountingOracle &oracle,
                                                 Rng &rng);

/// 2^n: terms in the written-out superposition a classical searcher would scan.
[[nodiscard]] std::uint64_t printout_term_count(int n);

/// Side-by-side query accounting for one function.
///
/// Every measurement of an n-qubit register costs n units, and each round
/// measures v and a, so quantum_measurement_units = 2 n rounds.
struct CostReport {
    int n = 0;
    std::optional<std::uint64_t> quantum_rounds;
    std::optional<std::uint64_t> quantum_oracle_queries;
    std::optional<std::uint64_t> quantum_measurement_units;
    std::optional<std::uint64_t> classical_scan_queries;
    /// Median over birthday trials; absent when no trials were run.
    std::optional<double> classical_birthday_queries;
    std::uint64_t printout_terms = 0;
    /// Rendered width of one term |x>|f(x)>, in bits.
    std::uint64_t printout_term_bits = 0;

    friend bool operator==(const CostReport &, const CostReport &) = default;
};

/// Throws ArgumentError when the inputs disagree on n.
[[nodiscard]] CostReport
build_cost_report(const RunReport &quantum, const CollisionResult &scan,
                  std::span<const CollisionResult> birthday_trials);

/// Median, averaging the two middle values for even counts.
/// Throws ArgumentError on an empty input.
[[nodiscard]] double median(std::vector<double> values);

} // namespace simonsim
