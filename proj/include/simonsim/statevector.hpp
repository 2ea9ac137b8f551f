#pragma once

#include "simonsim/bits.hpp"
#include "simonsim/oracle.hpp"

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace simonsim {

using Complex = std::complex<double>;

namespace detail {
struct StateAccess;
}

/// Normalization tolerance held by every public operation.
inline constexpr double kNormTolerance = 1e-12;

enum class Register { a, v };

[[nodiscard]] std::string_view to_string(Register reg) noexcept;

/// Memory bound on the per-register width n.
struct Limits {
    static constexpr int kDefaultMaxN = 12;
    int max_n = kDefaultMaxN;

    /// Default bound, overridden by SIMONSIM_MAX_N when it holds an integer.
    [[nodiscard]] static Limits from_env();
    /// Throws CapacityError when n exceeds max_n.
    void check(int n) const;
};

/// Two n-qubit registers a (argument) and v (function value).
///
/// Joint basis index k = (x << n) | y: register a occupies the high-order n
/// bits, register v the low-order n bits. Every module and file format uses
/// this convention.
class RegisterLayout {
  public:
    explicit RegisterLayout(int n);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int total_qubits() const noexcept { return 2 * n_; }
    [[nodiscard]] Bits register_size() const noexcept { return dimension(n_); }
    [[nodiscard]] Bits joint_size() const noexcept {
        return dimension(2 * n_);
    }
    [[nodiscard]] Bits index(Bits x, Bits y) const noexcept {
        return (x << n_) | y;
    }
    [[nodiscard]] Bits a_part(Bits k) const noexcept { return k >> n_; }
    [[nodiscard]] Bits v_part(Bits k) const noexcept {
        return k & (register_size() - 1);
    }
    [[nodiscard]] Bits component(Bits k, Register reg) const noexcept {
        return reg == Register::a ? a_part(k) : v_part(k);
    }

    friend bool operator==(RegisterLayout, RegisterLayout) = default;

  private:
    int n_;
};

/// Dense amplitude vector over the 4^n joint basis states.
class StateVector {
  public:
    /// Wraps caller amplitudes; throws DimensionError on a length mismatch
    /// and ArgumentError when the squared norm is not 1 within tolerance.
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes);

    [[nodiscard]] const RegisterLayout &layout() const noexcept {
        return layout_;
    }
    [[nodiscard]] int n() const noexcept { return layout_.n(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] Complex amplitude(Bits x, Bits y) const {
        return amplitudes_[layout_.index(x, y)];
    }
    [[nodiscard]] double norm_squared() const noexcept;

  private:
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes,
                bool /*trusted*/)
        : layout_(layout), amplitudes_(std::move(amplitudes)) {}

    RegisterLayout layout_;
    std::vector<Complex> amplitudes_;

    friend struct detail::StateAccess;
};

struct MeasurementOutcome {
    Register reg;
    Bits value;
    double probability;
    StateVector post_state;
};

/// |0>_a |0>_v. Throws CapacityError when n exceeds limits.max_n.
[[nodiscard]] StateVector zero_state(RegisterLayout layout,
                                     const Limits &limits = {});

/// H^{(x)n} on one register; the other register is untouched.
[[nodiscard]] StateVector hadamard_register(StateVector state, Register reg);

/// |x>|y> -> |x>|y ^ f(x)>. Throws DimensionError when f.n() differs.
[[nodiscard]] StateVector apply_oracle(const StateVector &state,
                                       const SimonFunction &f);

/// p[w] = sum of |amp|^2 over basis states whose reg component is w.
[[nodiscard]] std::vector<double> marginal_distribution(const StateVector &state,
                                                        Register reg);

/// Projects onto reg = value and renormalizes. Throws ArgumentError when the
/// value has zero probability or is out of range.
[[nodiscard]] MeasurementOutcome collapse_register(const StateVector &state,
                                                   Register reg, Bits value);

/// Projective measurement of one register.
///
/// The value is chosen by inverse CDF over ascending values: the first w with
/// draw < p[0] + ... + p[w]. Throws ArgumentError unless draw is in [0, 1).
[[nodiscard]] MeasurementOutcome measure_register(const StateVector &state,
                                                  Register reg, double draw);

/// Inverse-CDF selection over ascending indices, skipping zero-probability
/// entries. draw must be in [0, 1).
[[nodiscard]] Bits sample_inverse_cdf(std::span<const double> probabilities,
                                      double draw);

/// In-place H^{(x)n} over a 2^n vector, one butterfly pass per bit from the
/// least significant upwards. Same arithmetic as hadamard_register applies to
/// each a-register slice.
void walsh_hadamard(std::span<Complex> values);

} // namespace simonsim
