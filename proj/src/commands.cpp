#include "simonsim/commands.hpp"

#include "simonsim/errors.hpp"
#include "simonsim/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace simonsim::cli {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string_view arm_name(Arm arm) {
    switch (arm) {
    case Arm::quantum:
        return "quantum";
    case Arm::scan:
        return "scan";
    case Arm::birthday:
        return "birthday";
    }
    return "";
}

bool has_arm(const ExperimentConfig &config, Arm arm) {
    return std::find(config.strategies.begin(), config.strategies.end(),
                     arm) != config.strategies.end();
}

std::uint64_t resolve_max_rounds(std::uint64_t requested, int n) {
    return requested == 0 ? default_max_rounds(n) : requested;
}

const char *const kCostFields[] = {
    "quantum_rounds",         "quantum_oracle_queries",
    "quantum_measurement_units", "classical_scan_queries",
    "classical_birthday_queries", "printout_terms",
    "printout_term_bits",
};

/// Load and shape-check a function table file.
SimonFunction load_function(const std::string &path) {
    return function_from_json(read_json_file(path));
}

int report_error(std::ostream &err, const std::exception &e, int code) {
    err << "error: " << e.what() << "\n";
    return code;
}

struct Flags {
    int n = 0;
    std::uint64_t seed = 0;
    std::string r;
    std::uint64_t trials = 1;
    std::string measure_v = "on";
    std::uint64_t max_rounds = 0;
    std::string strategy;
    std::vector<std::string> strategies{"quantum", "scan", "birthday"};
    double tolerance = kNormTolerance;
    std::string format = "json";
    std::string out;
    std::string file;
};

int cmd_gen(const Flags &flags, std::ostream &out) {
    if (flags.n < 1 || flags.n > kMaxWordBits) {
        throw ArgumentError("--n must be in [1, " +
                            std::to_string(kMaxWordBits) + "]");
    }
    std::optional<Bits> r;
    if (!flags.r.empty()) {
        r = parse_hex(flags.r, flags.n);
    }
    const SimonFunction f = gen_function(flags.n, flags.seed, r);
    (void)verify_promise(f);
    Output{flags.out, &out}.write(dump(function_to_json(f)));
    return kSuccess;
}

int cmd_simon(const Flags &flags, const Limits &limits, std::ostream &out,
              std::ostream &err) {
    const SimonFunction f = load_function(flags.file);
    (void)verify_promise(f);
    limits.check(f.n());
    const bool measure_v = flags.measure_v == "on";
    const Output sink{flags.out, &out};
    try {
        const RunReport report =
            recover_hidden_shift(f, measure_v, flags.seed,
                                 resolve_max_rounds(flags.max_rounds, f.n()),
                                 limits);
        sink.write(dump(run_report_to_json(report)));
        return report.success ? kSuccess : kFailure;
    } catch (const BudgetExhaustedError &e) {
        sink.write(dump(run_report_to_json(e.partial())));
        return report_error(err, e, kFailure);
    }
}

int cmd_classical(const Flags &flags, std::ostream &out) {
    const SimonFunction f = load_function(flags.file);
    (void)verify_promise(f);
    CountingOracle oracle(f);
    CollisionResult result;
    if (parse_strategy(flags.strategy) == CollisionStrategy::scan) {
        result = scan_collision(oracle);
    } else {
        Rng rng(flags.seed);
        result = birthday_collision(oracle, rng);
    }
    Output{flags.out, &out}.write(dump(collision_to_json(result)));
    return kSuccess;
}

int cmd_verify(const Flags &flags, const Limits &limits, std::ostream &out) {
    const SimonFunction f = load_function(flags.file);
    limits.check(f.n());

    Json summary;
    summary["n"] = f.n();
    summary["tolerance"] = flags.tolerance;
    bool all_pass = true;
    try {
        const HiddenShift r = verify_promise(f);
        summary["promise"] = {{"pass", true}, {"r", to_hex(r.value(), f.n())}};
    } catch (const PromiseViolationError &e) {
        summary["promise"] = {{"pass", false},
                              {"offending_x", to_hex(e.offending_x(), f.n())},
                              {"error", e.what()}};
        summary["equivalence"] = nullptr;
        summary["distillation"] = nullptr;
        summary["pass"] = false;
        Output{flags.out, &out}.write(dump(summary));
        return kFailure;
    }

    const auto equivalence = equivalence_check(f, flags.tolerance, limits);
    summary["equivalence"] = {
        {"pass", equivalence.pass},
        {"max_abs_difference", equivalence.max_abs_difference}};
    all_pass = all_pass && equivalence.pass;

    const auto distillation = distillation_check(f, flags.tolerance, limits);
    double worst = 0.0;
    Json failures = Json::array();
    for (const auto &outcome : distillation.outcomes) {
        for (double p : outcome.support_probabilities) {
            worst = std::max(worst, std::abs(p - 0.5));
        }
        if (!outcome.pass) {
            failures.push_back(to_hex(outcome.f_bar, f.n()));
        }
    }
    summary["distillation"] = {{"pass", distillation.pass},
                               {"outcomes", distillation.outcomes.size()},
                               {"max_deviation_from_half", worst},
                               {"failed_outcomes", std::move(failures)}};
    all_pass = all_pass && distillation.pass;
    summary["pass"] = all_pass;
    Output{flags.out, &out}.write(dump(summary));
    return all_pass ? kSuccess : kFailure;
}

int cmd_compare(const Flags &flags, const Limits &limits, std::ostream &out) {
    ExperimentConfig config;
    config.n = flags.n;
    config.seed = flags.seed;
    config.trials = flags.trials;
    config.measure_v = flags.measure_v == "on";
    config.max_rounds = flags.max_rounds;
    config.strategies.clear();
    for (const auto &name : flags.strategies) {
        const Arm arm = name == "quantum" ? Arm::quantum
                        : name == "scan"  ? Arm::scan
                                          : Arm::birthday;
        if (!has_arm(config, arm)) {
            config.strategies.push_back(arm);
        }
    }
    config.output_path = flags.out;
    config.format = flags.format == "csv" ? Format::csv : Format::json;

    const CompareResult result = run_compare(config, limits);
    Output{config.output_path, &out}.write(
        config.format == Format::csv ? compare_to_csv(result)
                                     : dump(compare_to_json(result)));
    return kSuccess;
}

} // namespace

void Output::write(const std::string &contents) const {
    if (path.empty() || path == "-") {
        *stream << contents;
        stream->flush();
        return;
    }
    write_text_file(path, contents);
}

SimonFunction gen_function(int n, std::uint64_t seed, std::optional<Bits> r) {
    if (n < 1 || n > kMaxWordBits) {
        throw ArgumentError("n must be in [1, " + std::to_string(kMaxWordBits) +
                            "]");
    }
    if (!r) {
        Rng rng(seed);
        r = 1 + uniform_below(rng, dimension(n) - 1);
    }
    return generate(n, HiddenShift(*r), seed);
}

TrialSeeds derive_trial_seeds(std::uint64_t seed, std::uint64_t trial, int n) {
    std::uint64_t state = seed ^ (trial * 0xd1b54a32d192ed03ULL);
    TrialSeeds seeds{};
    seeds.trial_seed = splitmix64(state);
    Rng rng(seeds.trial_seed);
    seeds.shift = 1 + uniform_below(rng, dimension(n) - 1);
    seeds.function_seed = rng();
    seeds.quantum_seed = rng();
    seeds.birthday_seed = rng();
    return seeds;
}

CompareResult run_compare(const ExperimentConfig &config,
                          const Limits &limits) {
    if (config.n < 1) {
        throw ArgumentError("n must be at least 1");
    }
    limits.check(config.n);
    if (config.trials < 1) {
        throw ArgumentError("trials must be at least 1");
    }
    if (config.strategies.empty()) {
        throw ArgumentError("at least one strategy is required");
    }

    CompareResult result;
    result.config = config;
    const int n = config.n;
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        const TrialSeeds seeds = derive_trial_seeds(config.seed, trial, n);
        const SimonFunction f =
            generate(n, HiddenShift(seeds.shift), seeds.function_seed);

        CompareRow row;
        row.trial = trial;
        row.seed = seeds.trial_seed;
        row.shift = seeds.shift;
        row.cost.n = n;
        row.cost.printout_terms = printout_term_count(n);
        row.cost.printout_term_bits = 2 * static_cast<std::uint64_t>(n);
        if (has_arm(config, Arm::quantum)) {
            const RunReport quantum = recover_hidden_shift(
                f, config.measure_v, seeds.quantum_seed,
                resolve_max_rounds(config.max_rounds, n), limits);
            row.cost.quantum_rounds = quantum.rounds;
            row.cost.quantum_oracle_queries = quantum.oracle_queries;
            row.cost.quantum_measurement_units =
                quantum.rounds * 2 * static_cast<std::uint64_t>(n);
        }
        if (has_arm(config, Arm::scan)) {
            CountingOracle oracle(f);
            row.cost.classical_scan_queries = scan_collision(oracle).queries;
        }
        if (has_arm(config, Arm::birthday)) {
            CountingOracle oracle(f);
            Rng rng(seeds.birthday_seed);
            row.cost.classical_birthday_queries =
                static_cast<double>(birthday_collision(oracle, rng).queries);
        }
        result.rows.push_back(std::move(row));
    }

    Json summary;
    summary["n"] = n;
    for (const char *field : kCostFields) {
        std::vector<double> values;
        for (const auto &row : result.rows) {
            const Json value = cost_report_to_json(row.cost)[field];
            if (!value.is_null()) {
                values.push_back(value.get<double>());
            }
        }
        summary[field] = values.empty() ? Json(nullptr) : Json(median(values));
    }
    result.summary = std::move(summary);
    return result;
}

Json compare_to_json(const CompareResult &result) {
    const ExperimentConfig &config = result.config;
    Json strategies = Json::array();
    for (Arm arm : config.strategies) {
        strategies.push_back(std::string(arm_name(arm)));
    }
    Json doc;
    doc["config"] = {{"n", config.n},
                     {"seed", config.seed},
                     {"trials", config.trials},
                     {"measure_v", config.measure_v},
                     {"max_rounds", resolve_max_rounds(config.max_rounds,
                                                       config.n)},
                     {"strategies", std::move(strategies)}};
    Json rows = Json::array();
    for (const auto &row : result.rows) {
        Json entry;
        entry["trial"] = row.trial;
        entry["seed"] = row.seed;
        entry["r"] = to_hex(row.shift, config.n);
        const Json cost = cost_report_to_json(row.cost);
        for (const auto &[key, value] : cost.items()) {
            entry[key] = value;
        }
        rows.push_back(std::move(entry));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = result.summary;
    return doc;
}

std::string compare_to_csv(const CompareResult &result) {
    auto cell = [](const Json &value) {
        if (value.is_null()) {
            return std::string();
        }
        if (value.is_string()) {
            return value.get<std::string>();
        }
        return value.dump();
    };

    std::ostringstream csv;
    csv << "trial,seed,r,n";
    for (const char *field : kCostFields) {
        csv << ',' << field;
    }
    csv << '\n';

    const Json doc = compare_to_json(result);
    for (const Json &row : doc["rows"]) {
        csv << cell(row["trial"]) << ',' << cell(row["seed"]) << ','
            << cell(row["r"]) << ',' << cell(row["n"]);
        for (const char *field : kCostFields) {
            csv << ',' << cell(row[field]);
        }
        csv << '\n';
    }
    const Json &summary = doc["summary"];
    csv << "median,,," << cell(summary["n"]);
    for (const char *field : kCostFields) {
        csv << ',' << cell(summary[field]);
    }
    csv << '\n';
    return csv.str();
}

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"Simon hidden-shift simulator and query-cost benchmark"};
    app.require_subcommand(1);
    Flags flags;

    auto add_out = [&](CLI::App *cmd) {
        cmd->add_option("--out", flags.out, "Output path (default stdout)");
    };
    auto add_measure_v = [&](CLI::App *cmd) {
        cmd->add_option("--measure-v", flags.measure_v,
                        "Measure register v before the final Hadamard")
            ->check(CLI::IsMember({"on", "off"}))
            ->capture_default_str();
    };
    const std::string bits_help =
        "Hex bit string, zero-padded to ceil(n/4) digits";

    auto *gen = app.add_subcommand("gen", "Generate a function-table file");
    gen->add_option("--n", flags.n, "Register width")->required();
    gen->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
    gen->add_option("--r", flags.r, "Hidden shift; " + bits_help);
    add_out(gen);

    auto *simon = app.add_subcommand("simon", "Recover r by quantum sampling");
    simon->add_option("file", flags.file, "Function-table file")->required();
    simon->add_option("--seed", flags.seed, "RNG seed")->capture_default_str();
    add_measure_v(simon);
    simon->add_option("--max-rounds", flags.max_rounds,
                      "Round budget (default 20 n)");
    add_out(simon);

    auto *classical =
        app.add_subcommand("classical", "Find a collision classically");
    classical->add_option("file", flags.file, "Function-table file")
        ->required();
    classical->add_option("--strategy", flags.strategy, "scan or birthday")
        ->required()
        ->check(CLI::IsMember({"scan", "birthday"}));
    classical->add_option("--seed", flags.seed, "RNG seed")
        ->capture_default_str();
    add_out(classical);

    auto *verify = app.add_subcommand(
        "verify", "Check the promise, deferred-measurement equivalence and "
                  "distillation");
    verify->add_option("file", flags.file, "Function-table file")->required();
    verify->add_option("--tolerance", flags.tolerance, "Absolute tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_out(verify);

    auto *compare = app.add_subcommand(
        "compare", "Quantum vs classical query counts over random functions");
    compare->add_option("--n", flags.n, "Register width")->required();
    compare->add_option("--seed", flags.seed, "RNG seed")
        ->capture_default_str();
    compare->add_option("--trials", flags.trials, "Number of random functions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_measure_v(compare);
    compare->add_option("--max-rounds", flags.max_rounds,
                        "Round budget (default 20 n)");
    compare
        ->add_option("--strategies", flags.strategies,
                     "Arms to run: quantum, scan, birthday")
        ->delimiter(',')
        ->check(CLI::IsMember({"quantum", "scan", "birthday"}))
        ->capture_default_str();
    compare->add_option("--format", flags.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    add_out(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        if (const auto *sub = app.get_subcommands().empty()
                                  ? nullptr
                                  : app.get_subcommands().front()) {
            err << sub->help();
        }
        return kUsage;
    }

    const Limits limits = Limits::from_env();
    try {
        if (gen->parsed()) {
            return cmd_gen(flags, out);
        }
        if (simon->parsed()) {
            return cmd_simon(flags, limits, out, err);
        }
        if (classical->parsed()) {
            return cmd_classical(flags, out);
        }
        if (verify->parsed()) {
            return cmd_verify(flags, limits, out);
        }
        return cmd_compare(flags, limits, out);
    } catch (const PromiseViolationError &e) {
        return report_error(err, e, kFailure);
    } catch (const BudgetExhaustedError &e) {
        return report_error(err, e, kFailure);
    } catch (const Error &e) {
        return report_error(err, e, kUsage);
    } catch (const std::exception &e) {
        return report_error(err, e, kUsage);
    }
}

} // namespace simonsim::cli
