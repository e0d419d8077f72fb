import random
from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from specto.cocycle import FixedPointTorusPoint
from specto.errors import InputError, PrecisionError
from specto.equidist import (
    FailedCondition,
    RecurrenceSeq,
    UDVerdict,
    degenerate_witness,
    hit_frequency,
    multiplicity_diagnostic,
    orbit_mod1,
    subsample,
    ud_conditions,
    ud_experiment,
    unit_root_witness,
    weyl_sums,
)
from specto.linalg import IntMatrix, RatVector
from specto.polyalg import is_degenerate

FIBONACCI = IntMatrix.of([[1, 1], [1, 0]])
SWAP = IntMatrix.of([[0, 1], [1, 0]])
E1 = RatVector.of([1, 0])


def _pairing(w, h):
    return sum(Fraction(a) * b for a, b in zip(w, h))


def test_ud_conditions_hold_for_fibonacci():
    verdict = ud_conditions(FIBONACCI, E1)
    assert verdict.holds
    assert verdict.failed_condition == FailedCondition.NONE
    assert verdict.witness is None


@pytest.mark.parametrize(
    "rows, vector, failed",
    [
        ([[1, 1], [1, 1]], [1, 0], FailedCondition.SINGULAR),
        ([[2, 0], [0, 2]], [1, 0], FailedCondition.DEPENDENT_ITERATES),
        ([[0, 1], [1, 0]], [1, 0], FailedCondition.DEGENERATE),
        ([[1, 0], [0, 3]], [1, 1], FailedCondition.UNIT_ROOT_EIGENVALUE),
    ],
)
def test_ud_conditions_report_first_failure(rows, vector, failed):
    verdict = ud_conditions(IntMatrix.of(rows), RatVector.of(vector))
    assert not verdict.holds
    assert verdict.failed_condition == failed


def test_swap_matrix_witness():
    verdict = ud_conditions(SWAP, E1)
    assert verdict.witness.k == 2
    h = tuple(verdict.witness.h)
    assert h in ((0, 1), (0, -1))
    current = E1.entries
    for _ in range(20):
        assert _pairing(current, h) == 0
        current = SWAP.apply(SWAP.apply(current))


def test_unit_root_witness_is_periodic():
    A = IntMatrix.of([[1, 0], [0, 3]])
    v = RatVector.of([1, 1])
    h = unit_root_witness(A, v, 1)
    assert h == (1, 0)
    verdict = ud_conditions(A, v)
    assert verdict.witness.k == 1
    assert tuple(verdict.witness.h) == h
    with pytest.raises(InputError):
        unit_root_witness(FIBONACCI, E1, 1)


def test_input_validation():
    with pytest.raises(InputError):
        ud_conditions(FIBONACCI, RatVector.of([0, 0]))
    with pytest.raises(InputError):
        ud_conditions(FIBONACCI, RatVector.of([1, 0, 0]))
    with pytest.raises(InputError):
        degenerate_witness(FIBONACCI, E1, 2)


def test_verdict_consistency_is_validated():
    with pytest.raises(ValidationError):
        UDVerdict(holds=True, failed_condition=FailedCondition.SINGULAR)
    with pytest.raises(ValidationError):
        UDVerdict(holds=False, failed_condition=FailedCondition.DEGENERATE)
    with pytest.raises(ValidationError):
        UDVerdict(holds=False)


def test_degenerate_witness_for_companion(companion):
    # (x² + x − 1)(x² − x − 1) = x⁴ − 3x² + 1
    A = companion([1, 0, -3, 0])
    v = RatVector.of([1, 0, 0, 0])
    k = is_degenerate(A)
    assert k == 2
    h = degenerate_witness(A, v, k)
    assert any(h)
    step = A.power(k)
    current = v.entries
    for _ in range(51):
        assert _pairing(current, h) == 0
        current = step.apply(current)


@pytest.mark.slow
def test_degenerate_witness_for_random_companions(companion):
    rng = random.Random(20240601)
    checked = 0
    while checked < 100:
        b = rng.choice([-1, 1]) * rng.randint(1, 5)
        c = rng.choice([-1, 1]) * rng.randint(1, 5)
        if b * b == 4 * c:
            continue
        A = companion([c * c, 0, 2 * c - b * b, 0])
        v = RatVector.of([1, 0, 0, 0])
        k = is_degenerate(A)
        assert k is not None
        h = degenerate_witness(A, v, k)
        step, current = A.power(k), v.entries
        for _ in range(51):
            assert _pairing(current, h) == 0
            current = step.apply(current)
        checked += 1


def test_orbit_mod1():
    x0 = FixedPointTorusPoint.from_fractions([Fraction(1, 4), 0], 128)
    orbit = orbit_mod1(FIBONACCI, x0, 5)
    np.testing.assert_array_equal(orbit, [[0.25, 0.0], [0.25, 0.25], [0.5, 0.25], [0.75, 0.5], [0.25, 0.75]])
    np.testing.assert_array_equal(orbit_mod1(FIBONACCI, FixedPointTorusPoint.zero(2, 4096), 3), np.zeros((3, 2)))


def test_orbit_mod1_checks_precision():
    with pytest.raises(PrecisionError) as excinfo:
        orbit_mod1(FIBONACCI, FixedPointTorusPoint.zero(2, 4096), 10_000)
    assert excinfo.value.required_bits == 10_064
    with pytest.raises(InputError):
        orbit_mod1(FIBONACCI, FixedPointTorusPoint.zero(3, 4096), 10)


def test_weyl_sums():
    uniform = (np.arange(100) / 100).reshape(-1, 1)
    value, _ = weyl_sums(uniform, 3)
    assert value < 1e-12

    alternating = (np.arange(100) * 0.5).reshape(-1, 1) % 1.0
    value, argmax = weyl_sums(alternating, 3)
    assert value == pytest.approx(1.0)
    assert abs(argmax[0]) == 2

    value, argmax = weyl_sums(np.zeros((10, 2)), 1)
    assert value == pytest.approx(1.0)
    assert len(argmax) == 2
    with pytest.raises(InputError):
        weyl_sums(uniform, 0)


def test_weyl_sums_is_independent_of_threads():
    points = np.random.default_rng(4).random((500, 2))
    assert weyl_sums(points, 3, threads=1) == weyl_sums(points, 3, threads=4)


def test_subsample():
    points = np.arange(10).reshape(-1, 1)
    np.testing.assert_array_equal(subsample(points, 3, 1).ravel(), [1, 4, 7])
    with pytest.raises(InputError):
        subsample(points, 0)


def test_multiplicity_diagnostic():
    assert multiplicity_diagnostic(RecurrenceSeq((1,), (1,)), 10) == 45
    assert multiplicity_diagnostic(RecurrenceSeq((1, 1), (0, 1)), 10) == 1
    swap_sequence = RecurrenceSeq.from_functional(SWAP, E1, (0, 1))
    assert swap_sequence.relation == (1, 0)
    assert swap_sequence.terms(6) == [0, 1, 0, 1, 0, 1]
    assert multiplicity_diagnostic(swap_sequence, 10) == 20
    with pytest.raises(InputError):
        multiplicity_diagnostic(swap_sequence, 100_001)
    with pytest.raises(InputError):
        RecurrenceSeq((0, 1), (0, 1))


def test_hit_frequency_of_degenerate_witness():
    rng = random.Random(5)
    for _ in range(5):
        omega = FixedPointTorusPoint.from_fractions([Fraction(rng.getrandbits(256), 2**256)], 256)
        assert hit_frequency(SWAP, E1, (0, 1), 2, omega, 400) >= 0.5 - 0.02
    with pytest.raises(InputError):
        hit_frequency(SWAP, E1, (0, 1), 2, FixedPointTorusPoint.zero(2, 64), 10)


def test_ud_experiment_is_deterministic():
    first = ud_experiment(FIBONACCI, E1, n_steps=500, n_omegas=3, seed=5)
    second = ud_experiment(FIBONACCI, E1, n_steps=500, n_omegas=3, seed=5, threads=1)
    assert first == second
    assert len(first.samples) == 3
    assert first.precision_bits >= 4096


def test_ud_experiment_with_explicit_omegas():
    omega = f"{3**50}/{2**90}"
    result = ud_experiment(FIBONACCI, E1, n_steps=200, omegas=[omega])
    assert len(result.samples) == 1
    with pytest.raises(InputError, match="small denominator|eventually periodic"):
        ud_experiment(FIBONACCI, E1, n_steps=200, omegas=["1/3"])


@pytest.mark.slow
def test_ud_experiment_fibonacci_majority():
    result = ud_experiment(FIBONACCI, E1, n_steps=100_000, h_max=3, n_omegas=10, seed=2024)
    assert result.passed >= 8
    assert result.majority_holds


def test_ud_experiment_subsamples_the_orbit():
    omega = f"{3**50}/{2**90}"
    result = ud_experiment(FIBONACCI, E1, n_steps=600, omegas=[omega], step=3, offset=2)
    assert (result.step, result.offset) == (3, 2)

    bits = result.precision_bits
    W = FixedPointTorusPoint.from_fractions([Fraction(omega)], bits).coordinates[0]
    orbit = orbit_mod1(FIBONACCI, FixedPointTorusPoint(bits, (W, 0)), 600)
    value, argmax = weyl_sums(orbit[2::3], 3)
    assert result.samples[0].max_weyl_sum == value
    assert tuple(result.samples[0].argmax) == argmax


@pytest.mark.slow
@pytest.mark.parametrize("step,offset", [(2, 0), (2, 1), (3, 2)])
def test_ud_experiment_fibonacci_subsequences(step, offset):
    result = ud_experiment(FIBONACCI, E1, n_steps=100_000, h_max=3, n_omegas=10, seed=2024, step=step, offset=offset)
    assert result.majority_holds
