import math

import pytest

import simonsim as s


def example():
    return s.SimonFunction(2, [0b01, 0b10, 0b10, 0b01])


def test_example_promise_and_json_round_trip():
    f = example()
    assert s.verify_promise(f) == 0b11
    assert f(2) == 0b10
    g = s.SimonFunction.from_json(f.to_json())
    assert g.table == f.table


def test_generate_is_seeded():
    a = s.generate(6, 0x2B, 11)
    b = s.generate(6, 0x2B, 11)
    assert a.table == b.table
    assert a.shift == 0x2B
    assert s.verify_promise(a) == 0x2B


def test_errors_map_to_exceptions():
    with pytest.raises(s.PromiseViolationError):
        s.verify_promise(s.SimonFunction(2, [0, 1, 2, 3]))
    with pytest.raises(s.InvalidShiftError):
        s.generate(3, 0, 1)
    with pytest.raises(s.ParseError):
        s.SimonFunction.from_json("{")
    with pytest.raises(s.CapacityError):
        s.zero_state(4, max_n=3)
    assert issubclass(s.CapacityError, s.SimonError)


def test_circuit_steps_on_the_example():
    f = example()
    state = s.hadamard_register(s.zero_state(2), s.Register.a)
    state = s.apply_oracle(state, f)
    pv = s.marginal_distribution(state, s.Register.v)
    assert pv[0b01] == pytest.approx(0.5)
    assert pv[0b10] == pytest.approx(0.5)
    out = s.measure_register(state, s.Register.v, 0.1)
    assert out.value == 0b01
    assert out.probability == pytest.approx(0.5)
    assert out.post_state.norm_squared() == pytest.approx(1.0)


def test_exact_distribution_and_checks():
    f = example()
    p = s.exact_z_distribution(f, True)
    assert p == pytest.approx([0.5, 0.0, 0.0, 0.5], abs=1e-12)
    diff, ok = s.equivalence_check(f)
    assert ok and diff < 1e-12
    ok, outcomes = s.distillation_check(f)
    assert ok
    assert [o["support"] for o in outcomes] == [[0, 3], [1, 2]]


def test_recovery_and_rounds():
    f = s.generate(8, 0x5A, 4)
    for measure_v in (True, False):
        report = s.recover_hidden_shift(f, measure_v=measure_v, seed=7)
        assert report.success
        assert report.recovered == 0x5A
        assert report.oracle_queries == report.rounds
    z = s.run_round(f, True, 3).z
    assert bin(z & 0x5A).count("1") % 2 == 0


def test_gf2_solver():
    system = s.ConstraintSystem(3)
    for row in (0b011, 0b101):
        assert system.add_row(row)
    assert system.rank == 2
    assert s.null_space_nonzero(system) == [0b111]
    assert s.solve_hidden_shift(system) == 0b111


def test_classical_baselines_and_cost_report():
    f = example()
    scan = s.scan_collision(s.CountingOracle(f))
    assert (scan.x1, scan.x2, scan.queries) == (1, 2, 3)
    birthday = s.birthday_collision(s.CountingOracle(f), 5)
    assert birthday.queries <= 3
    quantum = s.recover_hidden_shift(f, seed=1)
    report = s.build_cost_report(quantum, scan, [birthday])
    assert report["printout_terms"] == 4
    assert report["classical_scan_queries"] == 3
    assert report["quantum_measurement_units"] == quantum.rounds * 4
    assert s.printout_term_count(10) == 2**10


def test_state_vector_validation():
    amps = [0j] * 16
    amps[0] = 1 / math.sqrt(2)
    amps[5] = 1 / math.sqrt(2)
    state = s.StateVector(2, amps)
    assert state.amplitude(1, 1) == pytest.approx(1 / math.sqrt(2))
    with pytest.raises(s.ArgumentError):
        s.StateVector(2, [0j] * 16)
    with pytest.raises(s.DimensionError):
        s.StateVector(2, [1 + 0j])
