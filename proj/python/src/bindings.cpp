#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simonsim/baseline.hpp"
#include "simonsim/errors.hpp"
#include "simonsim/gf2.hpp"
#include "simonsim/oracle.hpp"
#include "simonsim/pipeline.hpp"
#include "simonsim/serialize.hpp"
#include "simonsim/statevector.hpp"

namespace py = pybind11;
using namespace simonsim;

namespace {

Limits limits_for(std::optional<int> max_n) {
    return max_n ? Limits{*max_n} : Limits::from_env();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simon hidden-shift statevector simulator and query-cost "
              "baselines";

    auto base = py::register_exception<Error>(m, "SimonError",
                                              PyExc_RuntimeError);
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<InvalidShiftError>(m, "InvalidShiftError",
                                              base.ptr());
    py::register_exception<PromiseViolationError>(m, "PromiseViolationError",
                                                  base.ptr());
    py::register_exception<InsufficientRankError>(m, "InsufficientRankError",
                                                  base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExhaustedError>(m, "BudgetExhaustedError",
                                                 base.ptr());

    py::enum_<Register>(m, "Register")
        .value("a", Register::a)
        .value("v", Register::v);

    // oracle

    py::class_<SimonFunction>(m, "SimonFunction")
        .def(py::init([](int n, std::vector<Bits> table,
                         std::optional<Bits> shift) {
                 std::optional<HiddenShift> r;
                 if (shift) {
                     r = HiddenShift(*shift);
                 }
                 return SimonFunction(n, std::move(table), r);
             }),
             py::arg("n"), py::arg("table"), py::arg("shift") = py::none())
        .def_property_readonly("n", &SimonFunction::n)
        .def_property_readonly("table",
                               [](const SimonFunction &f) {
                                   return std::vector<Bits>(f.table().begin(),
                                                            f.table().end());
                               })
        .def_property_readonly("shift",
                               [](const SimonFunction &f) -> std::optional<Bits> {
                                   if (f.shift()) {
                                       return f.shift()->value();
                                   }
                                   return std::nullopt;
                               })
        .def("__call__", [](const SimonFunction &f, Bits x) {
            if (x >= f.size()) {
                throw ArgumentError("argument out of range");
            }
            return f(x);
        })
        .def("to_json",
             [](const SimonFunction &f) { return dump(function_to_json(f)); })
        .def_static("from_json", [](const std::string &text) {
            try {
                return function_from_json(Json::parse(text));
            } catch (const nlohmann::json::parse_error &e) {
                throw ParseError(e.what());
            }
        });

    m.def("generate",
          [](int n, Bits r, std::uint64_t seed) {
              return generate(n, HiddenShift(r), seed);
          },
          py::arg("n"), py::arg("r"), py::arg("seed"));
    m.def("verify_promise",
          [](const SimonFunction &f) { return verify_promise(f).value(); });

    py::class_<CountingOracle>(m, "CountingOracle")
        .def(py::init<SimonFunction>())
        .def("evaluate", &CountingOracle::evaluate)
        .def_property_readonly("queries", &CountingOracle::queries)
        .def("reset", &CountingOracle::reset);

    // statevector

    py::class_<StateVector>(m, "StateVector")
        .def(py::init([](int n, std::vector<Complex> amplitudes) {
                 return StateVector(RegisterLayout(n), std::move(amplitudes));
             }),
             py::arg("n"), py::arg("amplitudes"))
        .def_property_readonly("n", &StateVector::n)
        .def_property_readonly("amplitudes",
                               [](const StateVector &s) {
                                   return std::vector<Complex>(
                                       s.amplitudes().begin(),
                                       s.amplitudes().end());
                               })
        .def("amplitude", &StateVector::amplitude, py::arg("x"), py::arg("y"))
        .def("norm_squared", &StateVector::norm_squared);

    py::class_<MeasurementOutcome>(m, "MeasurementOutcome")
        .def_readonly("register", &MeasurementOutcome::reg)
        .def_readonly("value", &MeasurementOutcome::value)
        .def_readonly("probability", &MeasurementOutcome::probability)
        .def_readonly("post_state", &MeasurementOutcome::post_state);

    m.def("zero_state",
          [](int n, std::optional<int> max_n) {
              return zero_state(RegisterLayout(n), limits_for(max_n));
          },
          py::arg("n"), py::arg("max_n") = py::none());
    m.def("hadamard_register", &hadamard_register, py::arg("state"),
          py::arg("register"));
    m.def("apply_oracle", &apply_oracle, py::arg("state"), py::arg("f"));
    m.def("marginal_distribution", &marginal_distribution, py::arg("state"),
          py::arg("register"));
    m.def("measure_register", &measure_register, py::arg("state"),
          py::arg("register"), py::arg("draw"));

    // gf2

    py::class_<ConstraintSystem>(m, "ConstraintSystem")
        .def(py::init<int>())
        .def("add_row", &ConstraintSystem::add_row)
        .def_property_readonly("n", &ConstraintSystem::n)
        .def_property_readonly("rank", &ConstraintSystem::rank)
        .def_property_readonly("rows", &ConstraintSystem::rows);
    m.def("null_space_nonzero", &null_space_nonzero);
    m.def("solve_hidden_shift", [](const ConstraintSystem &system) {
        return solve_hidden_shift(system).value();
    });

    // pipeline

    py::class_<RoundSample>(m, "RoundSample")
        .def_readonly("z", &RoundSample::z)
        .def_readonly("v_measured", &RoundSample::v_measured)
        .def_readonly("v_value", &RoundSample::v_value);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("n", &RunReport::n)
        .def_readonly("seed", &RunReport::seed)
        .def_readonly("measure_v", &RunReport::measure_v)
        .def_readonly("rounds", &RunReport::rounds)
        .def_readonly("oracle_queries", &RunReport::oracle_queries)
        .def_property_readonly("recovered",
                               [](const RunReport &r) -> std::optional<Bits> {
                                   if (r.recovered) {
                                       return r.recovered->value();
                                   }
                                   return std::nullopt;
                               })
        .def_readonly("success", &RunReport::success)
        .def_readonly("rank_trajectory", &RunReport::rank_trajectory)
        .def("to_json",
             [](const RunReport &r) { return dump(run_report_to_json(r)); });

    m.def("run_round",
          [](const SimonFunction &f, bool measure_v, std::uint64_t seed) {
              Rng rng(seed);
              return run_round(f, measure_v, rng);
          },
          py::arg("f"), py::arg("measure_v"), py::arg("seed"));
    m.def("exact_z_distribution",
          [](const SimonFunction &f, bool measure_v) {
              return exact_z_distribution(f, measure_v);
          },
          py::arg("f"), py::arg("measure_v"));
    m.def("equivalence_check",
          [](const SimonFunction &f, double tolerance) {
              const auto result = equivalence_check(f, tolerance);
              return py::make_tuple(result.max_abs_difference, result.pass);
          },
          py::arg("f"), py::arg("tolerance") = kNormTolerance,
          "Returns (max_abs_difference, pass).");
    m.def("distillation_check",
          [](const SimonFunction &f, double tolerance) {
              const auto result = distillation_check(f, tolerance);
              py::list outcomes;
              for (const auto &o : result.outcomes) {
                  py::dict entry;
                  entry["f_bar"] = o.f_bar;
                  entry["probability"] = o.probability;
                  entry["support"] = o.support;
                  entry["support_probabilities"] = o.support_probabilities;
                  entry["pass"] = o.pass;
                  outcomes.append(entry);
              }
              return py::make_tuple(result.pass, outcomes);
          },
          py::arg("f"), py::arg("tolerance") = kNormTolerance,
          "Returns (pass, per-outcome details).");
    m.def("recover_hidden_shift",
          [](const SimonFunction &f, bool measure_v, std::uint64_t seed,
             std::optional<std::uint64_t> max_rounds) {
              return recover_hidden_shift(
                  f, measure_v, seed,
                  max_rounds.value_or(default_max_rounds(f.n())));
          },
          py::arg("f"), py::arg("measure_v") = true, py::arg("seed") = 0,
          py::arg("max_rounds") = py::none());

    // baseline

    py::class_<CollisionResult>(m, "CollisionResult")
        .def_readonly("n", &CollisionResult::n)
        .def_readonly("x1", &CollisionResult::x1)
        .def_readonly("x2", &CollisionResult::x2)
        .def_readonly("queries", &CollisionResult::queries)
        .def_property_readonly("strategy", [](const CollisionResult &c) {
            return std::string(to_string(c.strategy));
        });

    m.def("scan_collision", &scan_collision, py::arg("oracle"));
    m.def("birthday_collision",
          [](CountingOracle &oracle, std::uint64_t seed) {
              Rng rng(seed);
              return birthday_collision(oracle, rng);
          },
          py::arg("oracle"), py::arg("seed"));
    m.def("printout_term_count", &printout_term_count);
    m.def("build_cost_report",
          [](const RunReport &quantum, const CollisionResult &scan,
             const std::vector<CollisionResult> &birthday) {
              return py::module_::import("json").attr("loads")(dump(
                  cost_report_to_json(build_cost_report(quantum, scan,
                                                        birthday))));
          },
          py::arg("quantum"), py::arg("scan"),
          py::arg("birthday_trials") = std::vector<CollisionResult>{},
          "Returns the cost report as a dict.");
}
