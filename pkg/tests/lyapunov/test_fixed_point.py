import numpy as np
import pytest

from specto.errors import PrecisionError
from specto.linalg import IntMatrix
from specto.lyapunov import (
    FixedPointTorusPoint,
    bits_per_step,
    check_precision,
    random_point,
    required_precision_bits,
    working_precision,
)
from specto.substitution import substitution_matrix

FIBONACCI = IntMatrix.of([[1, 1], [1, 0]])


def test_bits_per_step(zeta_20):
    assert bits_per_step(IntMatrix.of([[2]])) == 1
    assert bits_per_step(FIBONACCI) == 1
    assert bits_per_step(IntMatrix.identity(3)) == 0
    assert bits_per_step(substitution_matrix(zeta_20).transpose()) == 6


def test_required_and_working_precision(zeta_20):
    assert required_precision_bits(FIBONACCI, 100) == 164
    assert working_precision(FIBONACCI, 10) == 4096
    assert working_precision(FIBONACCI, 10, precision_bits=8192) == 8192
    assert working_precision(substitution_matrix(zeta_20).transpose(), 1000) == 6064


def test_check_precision_reports_required_bits():
    check_precision(FIBONACCI, FixedPointTorusPoint.zero(2, 4096), 4000)
    with pytest.raises(PrecisionError) as excinfo:
        check_precision(FIBONACCI, FixedPointTorusPoint.zero(2, 4096), 10_000)
    assert excinfo.value.required_bits == 10_064


def test_random_point_is_in_range():
    rng = np.random.default_rng(1)
    for bits in (7, 64, 100):
        point = random_point(rng, 3, bits)
        assert point.dim == 3
        assert all(0 <= c < 2**bits for c in point.coordinates)


def test_required_precision_is_within_entrywise_rule():
    rng = np.random.default_rng(21)
    for _ in range(100):
        d = int(rng.integers(2, 5))
        E = IntMatrix.of(rng.integers(-9, 10, size=(d, d)).tolist())
        largest = max(abs(e) for row in E.entries for e in row)
        if largest == 0:
            continue
        n_steps = int(rng.integers(1, 200))
        entrywise = n_steps * (d * d * largest - 1).bit_length() + 64
        assert required_precision_bits(E, n_steps) <= entrywise
