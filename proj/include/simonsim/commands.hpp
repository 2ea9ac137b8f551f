#pragma once

#include "simonsim/baseline.hpp"
#include "simonsim/bits.hpp"
#include "simonsim/serialize.hpp"
#include "simonsim/statevector.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace simonsim::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1, ///< verification or recovery failed
    kUsage = 2,   ///< bad flags, unreadable or malformed input
};

enum class Format { json, csv };

enum class Arm { quantum, scan, birthday };

struct ExperimentConfig {
    int n = 8;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    bool measure_v = true;
    /// 0 selects the default budget of 20 n rounds.
    std::uint64_t max_rounds = 0;
    std::vector<Arm> strategies{Arm::quantum, Arm::scan, Arm::birthday};
    /// Empty writes to the command's output stream.
    std::filesystem::path output_path;
    Format format = Format::json;
};

/// Where a command's document goes: a file when path is non-empty.
struct Output {
    std::filesystem::path path;
    std::ostream *stream = nullptr;

    void write(const std::string &contents) const;
};

/// Function-table document for (n, seed, r). When r is absent it is drawn
/// from seed. Throws InvalidShiftError for r = 0.
[[nodiscard]] SimonFunction gen_function(int n, std::uint64_t seed,
                                         std::optional<Bits> r);

/// Per-trial seeds for compare, derived from (seed, trial) by SplitMix64.
struct TrialSeeds {
    std::uint64_t trial_seed;
    Bits shift;
    std::uint64_t function_seed;
    std::uint64_t quantum_seed;
    std::uint64_t birthday_seed;
};
[[nodiscard]] TrialSeeds derive_trial_seeds(std::uint64_t seed,
                                            std::uint64_t trial, int n);

struct CompareRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    Bits shift = 0;
    CostReport cost;
};

struct CompareResult {
    ExperimentConfig config;
    std::vector<CompareRow> rows;
    /// Median of every present field across rows.
    Json summary;
};

/// Runs every trial of the experiment. Deterministic in the config.
[[nodiscard]] CompareResult run_compare(const ExperimentConfig &config,
                                        const Limits &limits);

[[nodiscard]] Json compare_to_json(const CompareResult &result);
/// Fixed columns: trial, seed, r, n, quantum_rounds, quantum_oracle_queries,
/// quantum_measurement_units, classical_scan_queries,
/// classical_birthday_queries, printout_terms, printout_term_bits.
/// The last row has trial = "median". Cells use the JSON text of each value.
[[nodiscard]] std::string compare_to_csv(const CompareResult &result);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace simonsim::cli
