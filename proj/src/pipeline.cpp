#include "simonsim/pipeline.hpp"

#include "simonsim/gf2.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace simonsim {

BudgetExhaustedError::BudgetExhaustedError(RunReport partial)
    : Error("round budget of " + std::to_string(partial.rounds) +
            " exhausted at rank " +
            std::to_string(partial.rank_trajectory.empty()
                               ? 0
                               : partial.rank_trajectory.back()) +
            " (need " + std::to_string(partial.n - 1) + ")"),
      partial_(std::move(partial)) {}

RoundSampler::RoundSampler(const SimonFunction &f, bool measure_v,
                           const Limits &limits)
    : f_(f), shift_(verify_promise(f)), measure_v_(measure_v) {
    limits.check(f.n());
    const Bits size = f.size();

    uniform_.assign(size, Complex{});
    uniform_[0] = 1.0;
    walsh_hadamard(uniform_);

    v_marginal_.assign(size, 0.0);
    for (Bits x = 0; x < size; ++x) {
        v_marginal_[f_(x)] += std::norm(uniform_[x]);
    }

    if (!measure_v_) {
        unmeasured_.assign(size, 0.0);
        std::vector<Complex> slice(size);
        for (Bits y = 0; y < size; ++y) {
            if (v_marginal_[y] == 0.0) {
                continue;
            }
            std::fill(slice.begin(), slice.end(), Complex{});
            for (Bits x = 0; x < size; ++x) {
                if (f_(x) == y) {
                    slice[x] = uniform_[x];
                }
            }
            walsh_hadamard(slice);
            for (Bits z = 0; z < size; ++z) {
                unmeasured_[z] += std::norm(slice[z]);
            }
        }
    }
}

std::vector<Complex> RoundSampler::collapsed_slice(Bits y) const {
    const Bits size = f_.size();
    if (y >= size || !(v_marginal_[y] > 0.0)) {
        throw ArgumentError("v outcome " + std::to_string(y) +
                            " has zero probability");
    }
    const double scale = 1.0 / std::sqrt(v_marginal_[y]);
    std::vector<Complex> slice(size);
    for (Bits x = 0; x < size; ++x) {
        if (f_(x) == y) {
            slice[x] = uniform_[x] * scale;
        }
    }
    return slice;
}

std::vector<double> RoundSampler::conditional_z_distribution(Bits y) const {
    auto slice = collapsed_slice(y);
    walsh_hadamard(slice);
    std::vector<double> p(slice.size());
    for (Bits z = 0; z < slice.size(); ++z) {
        p[z] = std::norm(slice[z]);
    }
    return p;
}

std::vector<double> RoundSampler::unmeasured_z_distribution() const {
    if (!measure_v_) {
        return unmeasured_;
    }
    return RoundSampler(f_, false, Limits{f_.n()}).unmeasured_;
}

RoundSample RoundSampler::sample(double v_draw, double a_draw) const {
    RoundSample out;
    out.v_measured = measure_v_;
    if (measure_v_) {
        const Bits y = sample_inverse_cdf(v_marginal_, v_draw);
        out.v_value = y;
        out.z = sample_inverse_cdf(conditional_z_distribution(y), a_draw);
    } else {
        out.z = sample_inverse_cdf(unmeasured_, a_draw);
    }
    return out;
}

RoundSample RoundSampler::sample(Rng &rng) const {
    const double v_draw = measure_v_ ? uniform_draw(rng) : 0.0;
    const double a_draw = uniform_draw(rng);
    return sample(v_draw, a_draw);
}

RoundSample run_round(const SimonFunction &f, bool measure_v, Rng &rng,
                      const Limits &limits) {
    return RoundSampler(f, measure_v, limits).sample(rng);
}

RoundSample run_round_dense(const SimonFunction &f, bool measure_v, Rng &rng,
                            const Limits &limits) {
    (void)verify_promise(f);
    const RegisterLayout layout(f.n());
    auto state = hadamard_register(zero_state(layout, limits), Register::a);
    state = apply_oracle(state, f);

    RoundSample out;
    out.v_measured = measure_v;
    if (measure_v) {
        auto outcome = measure_register(state, Register::v, uniform_draw(rng));
        out.v_value = outcome.value;
        state = std::move(outcome.post_state);
    }
    state = hadamard_register(std::move(state), Register::a);
    out.z = measure_register(state, Register::a, uniform_draw(rng)).value;
    return out;
}

std::vector<double> exact_z_distribution(const SimonFunction &f,
                                         bool measure_v, const Limits &limits) {
    const RoundSampler sampler(f, measure_v, limits);
    if (!measure_v) {
        return sampler.unmeasured_z_distribution();
    }
    const auto &pv = sampler.v_marginal();
    std::vector<double> p(f.size(), 0.0);
    for (Bits y = 0; y < pv.size(); ++y) {
        if (pv[y] == 0.0) {
            continue;
        }
        const auto conditional = sampler.conditional_z_distribution(y);
        for (Bits z = 0; z < p.size(); ++z) {
            p[z] += pv[y] * conditional[z];
        }
    }
    return p;
}

std::vector<double> exact_z_distribution_dense(const SimonFunction &f,
                                               bool measure_v,
                                               const Limits &limits) {
    (void)verify_promise(f);
    const RegisterLayout layout(f.n());
    const auto prepared = apply_oracle(
        hadamard_register(zero_state(layout, limits), Register::a), f);
    if (!measure_v) {
        return marginal_distribution(hadamard_register(prepared, Register::a),
                                     Register::a);
    }
    const auto pv = marginal_distribution(prepared, Register::v);
    std::vector<double> p(f.size(), 0.0);
    for (Bits y = 0; y < pv.size(); ++y) {
        if (pv[y] == 0.0) {
            continue;
        }
        auto outcome = collapse_register(prepared, Register::v, y);
        const auto conditional = marginal_distribution(
            hadamard_register(std::move(outcome.post_state), Register::a),
            Register::a);
        for (Bits z = 0; z < p.size(); ++z) {
            p[z] += outcome.probability * conditional[z];
        }
    }
    return p;
}

EquivalenceResult equivalence_check(const SimonFunction &f, double tolerance,
                                    const Limits &limits) {
    const auto measured = exact_z_distribution(f, true, limits);
    const auto unmeasured = exact_z_distribution(f, false, limits);
    EquivalenceResult result;
    for (Bits z = 0; z < measured.size(); ++z) {
        result.max_abs_difference = std::max(
            result.max_abs_difference, std::abs(measured[z] - unmeasured[z]));
    }
    result.pass = result.max_abs_difference <= tolerance;
    return result;
}

DistillationResult distillation_check(const SimonFunction &f, double tolerance,
                                      const Limits &limits) {
    const RoundSampler sampler(f, true, limits);
    const Bits r = sampler.shift().value();
    DistillationResult result{true, sampler.shift(), {}};

    const auto &pv = sampler.v_marginal();
    for (Bits y = 0; y < pv.size(); ++y) {
        if (pv[y] == 0.0) {
            continue;
        }
        DistillationOutcome outcome;
        outcome.f_bar = y;
        outcome.probability = pv[y];
        const auto slice = sampler.collapsed_slice(y);
        for (Bits x = 0; x < slice.size(); ++x) {
            const double p = std::norm(slice[x]);
            if (p > 0.0) {
                outcome.support.push_back(x);
                outcome.support_probabilities.push_back(p);
            }
        }
        outcome.pass = outcome.support.size() == 2 &&
                       (outcome.support[0] ^ outcome.support[1]) == r &&
                       f(outcome.support[0]) == y && f(outcome.support[1]) == y;
        for (double p : outcome.support_probabilities) {
            outcome.pass = outcome.pass && std::abs(p - 0.5) <= tolerance;
        }
        result.pass = result.pass && outcome.pass;
        result.outcomes.push_back(std::move(outcome));
    }
    return result;
}

RunReport recover_hidden_shift(const SimonFunction &f, bool measure_v,
                               std::uint64_t seed, std::uint64_t max_rounds,
                               const Limits &limits) {
    if (max_rounds < 1) {
        throw ArgumentError("max_rounds must be at least 1");
    }
    const int n = f.n();
    RunReport report;
    report.n = n;
    report.seed = seed;
    report.measure_v = measure_v;

    ConstraintSystem system(n);
    if (n == 1) {
        // Rank target 0 holds vacuously; the only nonzero 1-bit shift is 1.
        const HiddenShift truth = verify_promise(f);
        report.recovered = solve_hidden_shift(system);
        report.success = report.recovered == truth;
        return report;
    }

    const RoundSampler sampler(f, measure_v, limits);
    Rng rng(seed);
    while (system.rank() < n - 1) {
        if (report.rounds == max_rounds) {
            throw BudgetExhaustedError(std::move(report));
        }
        const RoundSample round = sampler.sample(rng);
        ++report.rounds;
        ++report.oracle_queries;
        system.add_row(round.z);
        report.rank_trajectory.push_back(system.rank());
    }
    report.recovered = solve_hidden_shift(system);
    report.success = report.recovered == sampler.shift();
    return report;
}

} // namespace simonsim
