#include "simonsim/statevector.hpp"

#include "simonsim/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace simonsim {

namespace detail {
struct StateAccess {
    static StateVector make(RegisterLayout layout,
                            std::vector<Complex> amplitudes) {
        return StateVector(layout, std::move(amplitudes), true);
    }
    static std::vector<Complex> &amplitudes(StateVector &state) {
        return state.amplitudes_;
    }
};
} // namespace detail

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

inline void butterfly(Complex &lo, Complex &hi) {
    const Complex u = lo;
    const Complex w = hi;
    lo = (u + w) * kInvSqrt2;
    hi = (u - w) * kInvSqrt2;
}

void check_draw(double draw) {
    if (!(draw >= 0.0 && draw < 1.0)) {
        throw ArgumentError("measurement draw must be in [0, 1), got " +
                            std::to_string(draw));
    }
}

} // namespace

std::string_view to_string(Register reg) noexcept {
    return reg == Register::a ? "a" : "v";
}

Limits Limits::from_env() {
    Limits limits;
    if (const char *value = std::getenv("SIMONSIM_MAX_N")) {
        char *end = nullptr;
        const long parsed = std::strtol(value, &end, 10);
        if (end != value && *end == '\0' && parsed >= 1 &&
            parsed <= kMaxWordBits / 2) {
            limits.max_n = static_cast<int>(parsed);
        }
    }
    return limits;
}

void Limits::check(int n) const {
    if (n > max_n) {
        throw CapacityError("register width n = " + std::to_string(n) +
                            " exceeds the capacity bound " +
                            std::to_string(max_n) +
                            " (raise it with SIMONSIM_MAX_N)");
    }
}

RegisterLayout::RegisterLayout(int n) : n_(n) {
    if (n < 1 || 2 * n > kMaxWordBits) {
        throw ArgumentError("register width n must be in [1, " +
                            std::to_string(kMaxWordBits / 2) + "], got " +
                            std::to_string(n));
    }
}

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
    : layout_(layout), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_.joint_size()) {
        throw DimensionError("state has " + std::to_string(amplitudes_.size()) +
                             " amplitudes, expected 4^" +
                             std::to_string(layout_.n()));
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw ArgumentError("state is not normalized");
    }
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const Complex &amp : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

StateVector zero_state(RegisterLayout layout, const Limits &limits) {
    limits.check(layout.n());
    std::vector<Complex> amplitudes(layout.joint_size());
    amplitudes[layout.index(0, 0)] = 1.0;
    return detail::StateAccess::make(layout, std::move(amplitudes));
}

StateVector hadamard_register(StateVector state, Register reg) {
    auto &amps = detail::StateAccess::amplitudes(state);
    const int n = state.n();
    const int first_bit = reg == Register::a ? n : 0;
    const Bits size = amps.size();
    for (int bit = first_bit; bit < first_bit + n; ++bit) {
        const Bits stride = Bits{1} << bit;
        for (Bits base = 0; base < size; base += 2 * stride) {
            for (Bits k = base; k < base + stride; ++k) {
                butterfly(amps[k], amps[k + stride]);
            }
        }
    }
    return state;
}

StateVector apply_oracle(const StateVector &state, const SimonFunction &f) {
    const RegisterLayout &layout = state.layout();
    if (f.n() != layout.n()) {
        throw DimensionError("oracle width " + std::to_string(f.n()) +
                             " does not match register width " +
                             std::to_string(layout.n()));
    }
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (Bits k = 0; k < in.size(); ++k) {
        const Bits x = layout.a_part(k);
        const Bits y = layout.v_part(k);
        out[layout.index(x, y ^ f(x))] = in[k];
    }
    return detail::StateAccess::make(layout, std::move(out));
}

std::vector<double> marginal_distribution(const StateVector &state,
                                          Register reg) {
    const RegisterLayout &layout = state.layout();
    std::vector<double> p(layout.register_size(), 0.0);
    const auto amps = state.amplitudes();
    for (Bits k = 0; k < amps.size(); ++k) {
        p[layout.component(k, reg)] += std::norm(amps[k]);
    }
    return p;
}

Bits sample_inverse_cdf(std::span<const double> probabilities, double draw) {
    check_draw(draw);
    double cumulative = 0.0;
    Bits last_nonzero = 0;
    for (Bits w = 0; w < probabilities.size(); ++w) {
        if (probabilities[w] <= 0.0) {
            continue;
        }
        cumulative += probabilities[w];
        last_nonzero = w;
        if (draw < cumulative) {
            return w;
        }
    }
    // Rounding can leave the total a few ulps below the draw.
    return last_nonzero;
}

MeasurementOutcome collapse_register(const StateVector &state, Register reg,
                                     Bits value) {
    const RegisterLayout &layout = state.layout();
    if (value >= layout.register_size()) {
        throw ArgumentError("register value out of range");
    }
    const auto p = marginal_distribution(state, reg);
    const double probability = p[value];
    if (!(probability > 0.0)) {
        throw ArgumentError("cannot collapse onto a zero-probability value");
    }

    const double scale = 1.0 / std::sqrt(probability);
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (Bits k = 0; k < in.size(); ++k) {
        if (layout.component(k, reg) == value) {
            out[k] = in[k] * scale;
        }
    }
    return MeasurementOutcome{reg, value, probability,
                              detail::StateAccess::make(layout, std::move(out))};
}

MeasurementOutcome measure_register(const StateVector &state, Register reg,
                                    double draw) {
    check_draw(draw);
    const auto p = marginal_distribution(state, reg);
    return collapse_register(state, reg, sample_inverse_cdf(p, draw));
}

void walsh_hadamard(std::span<Complex> values) {
    const Bits size = values.size();
    for (Bits stride = 1; stride < size; stride <<= 1) {
        for (Bits base = 0; base < size; base += 2 * stride) {
            for (Bits k = base; k < base + stride; ++k) {
                butterfly(values[k], values[k + stride]);
            }
        }
    }
}

} // namespace simonsim
