from fractions import Fraction

import pytest
import sympy

from specto.errors import InputError
from specto.linalg import IntMatrix, IntPoly, char_poly
from specto.polyalg import (
    cyclotomic,
    has_unit_root,
    is_degenerate,
    minimal_poly_of_root,
    nondegenerate_power,
    ratio_polynomial,
    roots_numeric,
)
from specto.substitution import substitution_matrix

GOLDEN = (1 + 5**0.5) / 2


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic(k, expected):
    assert cyclotomic(k) == IntPoly(expected)


def test_cyclotomic_rejects_non_positive_index():
    with pytest.raises(InputError):
        cyclotomic(0)


def test_has_unit_root():
    assert has_unit_root(IntPoly((-1, -1, 1))) is None
    assert has_unit_root(IntPoly((1, 0, 1))) == 4
    assert has_unit_root(IntPoly((3, -4, 1))) == 1
    assert has_unit_root(IntPoly((1, 1, 1))) == 3
    with pytest.raises(InputError):
        has_unit_root(IntPoly(()))


def test_ratio_polynomial_roots_are_ratios():
    # x² − 1 의 근 ±1: 서로 다른 근의 비는 −1 뿐입니다.
    R = ratio_polynomial(IntPoly((-1, 0, 1)))
    x = sympy.Symbol("x")
    assert R.as_expr().subs(x, -1) == 0
    assert R.as_expr().subs(x, 1) != 0


def test_is_degenerate():
    assert is_degenerate(IntMatrix.of([[0, 1], [1, 0]])) == 2
    assert is_degenerate(IntMatrix.of([[1, 1], [1, 0]])) is None
    assert is_degenerate(IntMatrix.of([[2, 0], [0, 2]])) is None
    # 고유값 ±2i: 비가 −1
    assert is_degenerate(IntMatrix.of([[0, -4], [1, 0]])) == 2
    with pytest.raises(InputError):
        is_degenerate(IntMatrix.zeros(2))


def test_nondegenerate_power():
    assert nondegenerate_power(IntMatrix.of([[1, 1], [1, 0]])) == 1
    assert nondegenerate_power(IntMatrix.of([[0, 1], [1, 0]])) == 2
    # x² + 1 의 동반 행렬: 근 ±i 의 비가 −1 이므로 제곱이면 충분합니다.
    A = IntMatrix.of([[0, -1], [1, 0]])
    k = nondegenerate_power(A)
    assert k == 2
    assert is_degenerate(A.power(k)) is None


def test_nondegenerate_power_of_third_roots():
    # 고유값 2, 2ω, 2ω² (x³ − 8)
    A = IntMatrix.of([[0, 0, 8], [1, 0, 0], [0, 1, 0]])
    k = nondegenerate_power(A)
    assert k == 3
    assert is_degenerate(A.power(k)) is None


def test_roots_numeric_golden_ratio():
    boxes = roots_numeric(IntPoly((-1, -1, 1)))
    centers = sorted(float(b.center_re) for b in boxes)
    assert centers[0] == pytest.approx(1 - GOLDEN, abs=1e-10)
    assert centers[1] == pytest.approx(GOLDEN, abs=1e-10)
    perron = [b for b in boxes if b.is_perron]
    assert len(perron) == 1
    assert float(perron[0].center_re) == pytest.approx(GOLDEN, abs=1e-10)
    assert all(b.is_real for b in boxes)


def test_roots_numeric_rational_root_is_exact():
    (box,) = roots_numeric(IntPoly((-3, 1)))
    assert box.exact == Fraction(3)
    assert box.radius == 0
    assert box.is_perron


def test_roots_numeric_complex_roots():
    boxes = roots_numeric(IntPoly((1, 0, 1)))
    assert len(boxes) == 2
    assert sorted(round(float(b.center_im), 8) for b in boxes) == [-1.0, 1.0]
    assert not any(b.is_perron for b in boxes)


def test_minimal_poly_of_root():
    # (x − 3)(x² − x − 1)
    p = IntPoly((3, 2, -4, 1))
    golden = next(b for b in roots_numeric(p) if abs(float(b.center_re) - GOLDEN) < 1e-6)
    assert minimal_poly_of_root(p, golden) == IntPoly((-1, -1, 1))
    three = next(b for b in roots_numeric(p) if b.exact == 3)
    assert minimal_poly_of_root(p, three) == IntPoly((-3, 1))

    irreducible = IntPoly((-1, -1, 1))
    box = next(b for b in roots_numeric(irreducible) if b.is_perron)
    assert minimal_poly_of_root(irreducible, box) == irreducible


def test_minimal_poly_of_perron_root_of_zeta_3(zeta_3):
    p = char_poly(substitution_matrix(zeta_3))
    perron = next(b for b in roots_numeric(IntPoly.from_sympy(p.poly.sqf_part())) if b.is_perron)
    q = minimal_poly_of_root(p, perron)
    assert q == IntPoly((9, -8, 1))
    assert p.poly.rem(q.poly).is_zero
