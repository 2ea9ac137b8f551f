#include "simonsim/baseline.hpp"

#include "simonsim/errors.hpp"

#include <algorithm>
#include <string>

namespace simonsim {

namespace {
constexpr Bits kUnseen = ~Bits{0};
}

std::string_view to_string(CollisionStrategy strategy) noexcept {
    return strategy == CollisionStrategy::scan ? "scan" : "birthday";
}

CollisionStrategy parse_strategy(std::string_view name) {
    if (name == "scan") {
        return CollisionStrategy::scan;
    }
    if (name == "birthday") {
        return CollisionStrategy::birthday;
    }
    throw ArgumentError("unknown collision strategy '" + std::string(name) +
                        "' (expected scan or birthday)");
}

CollisionResult scan_collision(CountingOracle &oracle) {
    const Bits size = oracle.inner().size();
    // value -> first argument that produced it
    std::vector<Bits> seen(size, kUnseen);
    const std::uint64_t start = oracle.queries();
    for (Bits x = 0; x < size; ++x) {
        const Bits y = oracle.evaluate(x);
        if (seen[y] != kUnseen) {
            return CollisionResult{oracle.n(), seen[y], x,
                                   oracle.queries() - start,
                                   CollisionStrategy::scan};
        }
        seen[y] = x;
    }
    throw PromiseViolationError(size - 1,
                                "scan visited every argument without a collision");
}

CollisionResult birthday_collision(CountingOracle &oracle, Rng &rng) {
    const Bits size = oracle.inner().size();
    std::vector<Bits> seen(size, kUnseen);
    std::vector<bool> queried(size, false);
    const std::uint64_t start = oracle.queries();
    Bits distinct = 0;
    while (distinct < size) {
        const Bits x = uniform_below(rng, size);
        if (queried[x]) {
            continue;
        }
        queried[x] = true;
        ++distinct;
        const Bits y = oracle.evaluate(x);
        if (seen[y] != kUnseen) {
            return CollisionResult{oracle.n(), seen[y], x,
                                   oracle.queries() - start,
                                   CollisionStrategy::birthday};
        }
        seen[y] = x;
    }
    throw PromiseViolationError(
        0, "birthday search sampled every argument without a collision");
}

std::uint64_t printout_term_count(int n) {
    if (n < 1 || n > 63) {
        throw ArgumentError("n must be in [1, 63]");
    }
    return std::uint64_t{1} << n;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw ArgumentError("median of an empty set");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return (values[mid - 1] + values[mid]) / 2.0;
}

CostReport build_cost_report(const RunReport &quantum,
                             const CollisionResult &scan,
                             std::span<const CollisionResult> birthday_trials) {
    const int n = quantum.n;
    if (scan.n != n) {
        throw ArgumentError("scan result has n = " + std::to_string(scan.n) +
                            ", quantum run has n = " + std::to_string(n));
    }
    std::vector<double> birthday_queries;
    for (const auto &trial : birthday_trials) {
        if (trial.n != n) {
            throw ArgumentError("birthday trial has n = " +
                                std::to_string(trial.n) +
                                ", quantum run has n = " + std::to_string(n));
        }
        birthday_queries.push_back(static_cast<double>(trial.queries));
    }

    CostReport report;
    report.n = n;
    report.quantum_rounds = quantum.rounds;
    report.quantum_oracle_queries = quantum.oracle_queries;
    report.quantum_measurement_units =
        quantum.rounds * 2 * static_cast<std::uint64_t>(n);
    report.classical_scan_queries = scan.queries;
    if (!birthday_queries.empty()) {
        report.classical_birthday_queries = median(std::move(birthday_queries));
    }
    report.printout_terms = printout_term_count(n);
    report.printout_term_bits = 2 * static_cast<std::uint64_t>(n);
    return report;
}

} // namespace simonsim
