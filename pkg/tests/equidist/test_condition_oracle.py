"""작은 정수 행렬 전체에서 ud_conditions 와 is_degenerate 를 numpy 고유값 계산과 비교합니다."""

import itertools

import numpy as np
import pytest

from specto.equidist import FailedCondition, ud_conditions
from specto.linalg import IntMatrix, RatVector
from specto.polyalg import is_degenerate

DISTINCT = 1e-4
ROOT_OF_UNITY = 1e-4


def _is_root_of_unity(z: complex, orders) -> bool:
    return abs(abs(z) - 1) < ROOT_OF_UNITY and any(abs(z**k - 1) < ROOT_OF_UNITY * k for k in orders)


def _ratio_order(eigenvalues: np.ndarray, max_order: int) -> int | None:
    """서로 다른 0이 아닌 두 고유값의 비가 1의 k제곱근이 되는 가장 작은 k 입니다."""
    nonzero = [z for z in eigenvalues if abs(z) > DISTINCT]
    best = None
    for a, b in itertools.permutations(nonzero, 2):
        if abs(a - b) <= DISTINCT:
            continue
        ratio = a / b
        if abs(abs(ratio) - 1) > ROOT_OF_UNITY:
            continue
        for k in range(1, max_order + 1):
            if abs(ratio**k - 1) < ROOT_OF_UNITY * k:
                best = k if best is None else min(best, k)
                break
    return best


def _oracle(rows: list[list[int]]) -> FailedCondition:
    A = np.array(rows, dtype=float)
    if round(np.linalg.det(A)) == 0:
        return FailedCondition.SINGULAR
    v = np.array([1.0, 0.0, 0.0])
    krylov = np.column_stack([v, A @ v, A @ A @ v])
    if np.linalg.matrix_rank(krylov) < 3:
        return FailedCondition.DEPENDENT_ITERATES
    eigenvalues = np.linalg.eigvals(A)
    if _ratio_order(eigenvalues, 18) is not None:
        return FailedCondition.DEGENERATE
    if any(_is_root_of_unity(z, (1, 2, 3, 4, 6)) for z in eigenvalues):
        return FailedCondition.UNIT_ROOT_EIGENVALUE
    return FailedCondition.NONE


@pytest.mark.slow
def test_conditions_agree_with_eigenvalue_oracle():
    seen = set()
    for entries in itertools.product((-1, 0, 1), repeat=9):
        rows = [list(entries[0:3]), list(entries[3:6]), list(entries[6:9])]
        verdict = ud_conditions(IntMatrix.of(rows), RatVector.of([1, 0, 0]))
        expected = _oracle(rows)
        assert verdict.failed_condition == expected, rows
        seen.add(expected)
    assert {
        FailedCondition.SINGULAR,
        FailedCondition.DEPENDENT_ITERATES,
        FailedCondition.DEGENERATE,
        FailedCondition.NONE,
    } <= seen


def test_is_degenerate_on_all_small_2x2_matrices():
    degenerate = 0
    for entries in itertools.product(range(-2, 3), repeat=4):
        if not any(entries):
            continue
        rows = [list(entries[0:2]), list(entries[2:4])]
        expected = _ratio_order(np.linalg.eigvals(np.array(rows, dtype=float)), 6)
        assert is_degenerate(IntMatrix.of(rows)) == expected, rows
        degenerate += expected is not None
    assert degenerate > 0


def _char_poly_classes() -> tuple[np.ndarray, np.ndarray]:
    """{−2..2} 성분의 0이 아닌 3×3 행렬을 특성다항식 (tr, 주소행렬식 합, det) 별로 묶어 대표 행렬을 고릅니다."""
    values = np.arange(-2, 3, dtype=np.int16)
    grid = np.stack(np.meshgrid(*([values] * 9), indexing="ij"), axis=-1).reshape(-1, 9)
    grid = grid[np.any(grid != 0, axis=1)]
    a, b, c, d, e, f, g, h, i = grid.T
    trace = a + e + i
    minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    invariants = np.stack([trace, minors, det], axis=1)
    classes, first = np.unique(invariants, axis=0, return_index=True)
    return classes, grid[first]


@pytest.mark.slow
def test_is_degenerate_on_all_small_3x3_matrices():
    classes, representatives = _char_poly_classes()
    degenerate = 0
    for (trace, minors, det), entries in zip(classes.tolist(), representatives.tolist(), strict=True):
        rows = [entries[0:3], entries[3:6], entries[6:9]]
        # 특성다항식 x³ − tr·x² + m·x − det 의 근
        expected = _ratio_order(np.roots([1, -trace, minors, -det]), 18)
        assert is_degenerate(IntMatrix.of(rows)) == expected, rows
        degenerate += expected is not None
    assert degenerate > 0
