#pragma once

#include "simonsim/bits.hpp"
#include "simonsim/errors.hpp"
#include "simonsim/oracle.hpp"
#include "simonsim/statevector.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace simonsim {

struct RoundSample {
    Bits z = 0;
    bool v_measured = false;
    std::optional<Bits> v_value;
    /// Filled in by recover_hidden_shift; a bare run_round leaves it at 0.
    int rank_after = 0;
};

struct RunReport {
    int n = 0;
    std::uint64_t seed = 0;
    bool measure_v = true;
    std::uint64_t rounds = 0;
    std::uint64_t oracle_queries = 0;
    std::optional<HiddenShift> recovered;
    bool success = false;
    std::vector<int> rank_trajectory;

    friend bool operator==(const RunReport &, const RunReport &) = default;
};

/// Raised when max_rounds pass without reaching rank n - 1.
class BudgetExhaustedError : public Error {
  public:
    explicit BudgetExhaustedError(RunReport partial);
    [[nodiscard]] const RunReport &partial() const noexcept { return partial_; }

  private:
    RunReport partial_;
};

/// One round of the circuit on the v-block factorization of the joint state.
///
/// After the oracle the state is sum_x c |x>_a |f(x)>_v, so each v value owns
/// an a-register slice with two nonzero entries. The sampler applies the same
/// butterflies, sums and renormalizations as the dense StateVector path, one
/// slice at a time, which keeps memory at O(2^n). Outcomes match the dense
/// path draw-for-draw.
///
/// RNG contract per round: the v draw is consumed first (only when measure_v),
/// then the a draw.
class RoundSampler {
  public:
    /// Throws PromiseViolationError when f breaks the promise.
    RoundSampler(const SimonFunction &f, bool measure_v,
                 const Limits &limits = {});

    [[nodiscard]] RoundSample sample(Rng &rng) const;
    [[nodiscard]] RoundSample sample(double v_draw, double a_draw) const;

    [[nodiscard]] const SimonFunction &function() const noexcept { return f_; }
    [[nodiscard]] HiddenShift shift() const noexcept { return shift_; }
    [[nodiscard]] bool measure_v() const noexcept { return measure_v_; }

    /// v-register marginal of the post-oracle state.
    [[nodiscard]] const std::vector<double> &v_marginal() const noexcept {
        return v_marginal_;
    }
    /// Post-measurement a slice for v outcome y, before the final Hadamard.
    [[nodiscard]] std::vector<Complex> collapsed_slice(Bits y) const;
    /// a-register distribution after the final Hadamard, given v outcome y.
    [[nodiscard]] std::vector<double> conditional_z_distribution(Bits y) const;
    /// a-register distribution after the final Hadamard with v left unmeasured.
    [[nodiscard]] std::vector<double> unmeasured_z_distribution() const;

  private:
    SimonFunction f_;
    HiddenShift shift_;
    bool measure_v_;
    /// a amplitudes of H^n |0>: the coefficient of every term after the oracle.
    std::vector<Complex> uniform_;
    std::vector<double> v_marginal_;
    /// Deterministic pre-measurement distribution, cached when !measure_v.
    std::vector<double> unmeasured_;
};

/// zero_state -> H(a) -> oracle -> [measure v] -> H(a) -> measure a.
[[nodiscard]] RoundSample run_round(const SimonFunction &f, bool measure_v,
                                    Rng &rng, const Limits &limits = {});

/// The same round executed literally on a dense StateVector; reference for
/// RoundSampler at small n.
[[nodiscard]] RoundSample run_round_dense(const SimonFunction &f,
                                          bool measure_v, Rng &rng,
                                          const Limits &limits = {});

/// Exact z distribution. With measure_v the conditional distributions are
/// averaged with the v-outcome weights; otherwise the a marginal of the
/// unmeasured state is taken directly.
[[nodiscard]] std::vector<double> exact_z_distribution(const SimonFunction &f,
                                                       bool measure_v,
                                                       const Limits &limits = {});

/// Dense-StateVector version of exact_z_distribution.
[[nodiscard]] std::vector<double>
exact_z_distribution_dense(const SimonFunction &f, bool measure_v,
                           const Limits &limits = {});

struct EquivalenceResult {
    double max_abs_difference = 0.0;
    bool pass = false;
};

/// Compares the z distribution with and without measuring v.
[[nodiscard]] EquivalenceResult equivalence_check(const SimonFunction &f,
                                                  double tolerance,
                                                  const Limits &limits = {});

struct DistillationOutcome {
    Bits f_bar = 0;
    double probability = 0.0;
    /// Ascending a values with nonzero amplitude after the v measurement.
    std::vector<Bits> support;
    std::vector<double> support_probabilities;
    bool pass = false;
};

struct DistillationResult {
    bool pass = false;
    HiddenShift shift;
    std::vector<DistillationOutcome> outcomes;
};

/// For every v outcome, checks the collapsed a register is an equal-weight
/// pair {x, x ^ r} whose members both map to that outcome.
[[nodiscard]] DistillationResult distillation_check(const SimonFunction &f,
                                                    double tolerance,
                                                    const Limits &limits = {});

/// Default round budget, 20 n.
[[nodiscard]] constexpr std::uint64_t default_max_rounds(int n) noexcept {
    return 20ULL * static_cast<std::uint64_t>(n);
}

/// Repeats rounds until the constraint rank reaches n - 1, then solves for r.
/// Throws BudgetExhaustedError carrying the partial report.
[[nodiscard]] RunReport recover_hidden_shift(const SimonFunction &f,
                                             bool measure_v, std::uint64_t seed,
                                             std::uint64_t max_rounds,
                                             const Limits &limits = {});

} // namespace simonsim
