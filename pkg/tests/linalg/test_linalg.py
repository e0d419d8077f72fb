import random
from fractions import Fraction

import numpy as np
import pytest

from specto.errors import InputError, InvariantError
from specto.linalg import (
    IntMatrix,
    IntPoly,
    RatVector,
    char_poly,
    collatz_wielandt_lower,
    collatz_wielandt_upper,
    coordinates,
    cyclic_subspace,
    determinant,
    hermite_normal_form,
    integer_kernel,
    is_primitive,
    project_remark_b,
    rank,
    restrict,
    saturate_lattice,
    solve_in_span,
)
from specto.substitution import FamilyParams, FamilyTag, make_family, substitution_matrix

FIBONACCI = IntMatrix.of([[1, 1], [1, 0]])


def _random_matrix(rng: random.Random, d: int, low: int = -3, high: int = 3) -> IntMatrix:
    return IntMatrix.of([[rng.randint(low, high) for _ in range(d)] for _ in range(d)])


def _random_vector(rng: random.Random, d: int) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-4, 4) for _ in range(d))
        if any(v):
            return v


def test_char_poly_examples(zeta_3):
    assert char_poly(IntMatrix.identity(2)) == IntPoly((1, -2, 1))
    assert char_poly(IntMatrix.of([[0, 1], [1, 1]])) == IntPoly((-1, -1, 1))

    p = char_poly(substitution_matrix(zeta_3))
    assert p.degree == 3
    assert p(3) == 0


def test_char_poly_large_entries():
    A = IntMatrix.of([[10**30, 1], [0, 7]])
    p = char_poly(A)
    assert p(10**30) == 0
    assert p(7) == 0


def test_determinant():
    assert determinant(IntMatrix.of([[2, 1], [1, 1]])) == 1
    assert determinant(IntMatrix.of([[1, 1], [1, 1]])) == 0
    assert determinant(IntMatrix.of([[0, 1, 0], [0, 0, 1], [6, 0, 0]])) == 6


def test_matrix_input_validation():
    with pytest.raises(InputError):
        IntMatrix.of([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(InputError):
        IntMatrix.of([[1.5]])
    assert IntMatrix.of([["12345678901234567890"]]).entries == ((12345678901234567890,),)
    with pytest.raises(InputError):
        RatVector.of([0.5, 1])
    assert RatVector.of(["1/2", 3]).entries == (Fraction(1, 2), Fraction(3))


def test_cyclic_subspace_of_sigma_family():
    for m in (1, 2, 8):
        A = substitution_matrix(make_family(FamilyParams(FamilyTag.SIGMA_M, m))).transpose()
        V = cyclic_subspace(A, RatVector.ones(3))
        assert V.rank == 2
        assert V.lattice_basis == ((1, 1, 0), (0, 0, 1))
        assert V.restriction.entries == ((2 * m, 1), (2 * m + 2, 0))


def test_cyclic_subspace_small_cases():
    V = cyclic_subspace(IntMatrix.of([[2, 0], [0, 2]]), RatVector.of([1, 0]))
    assert V.rank == 1
    assert V.lattice_basis == ((1, 0),)
    assert V.restriction.entries == ((2,),)

    V = cyclic_subspace(FIBONACCI, RatVector.of([1, 0]))
    assert V.rank == 2
    assert char_poly(V.restriction) == char_poly(FIBONACCI)


def test_cyclic_subspace_rejects_bad_vectors():
    with pytest.raises(InputError):
        cyclic_subspace(FIBONACCI, RatVector.of([0, 0]))
    with pytest.raises(InputError):
        cyclic_subspace(FIBONACCI, RatVector.of([1, 0, 0]))


def test_restriction_identity_holds_exactly(zeta_3):
    A = substitution_matrix(zeta_3).transpose()
    V = cyclic_subspace(A, RatVector.of([1, 2, 3]))
    B = V.restriction
    for j, g in enumerate(V.lattice_basis):
        image = A.apply(g)
        expected = V.embed([B.entries[i][j] for i in range(V.rank)])
        assert tuple(image) == tuple(expected)


def test_saturate_lattice_examples():
    assert saturate_lattice([(2, 0)]) == ((1, 0),)
    assert saturate_lattice([(1, 1, 0), (0, 0, 2)]) == ((1, 1, 0), (0, 0, 1))
    assert saturate_lattice([(Fraction(1, 2), Fraction(1, 2))]) == ((1, 1),)
    with pytest.raises(InputError):
        saturate_lattice([])
    with pytest.raises(InputError):
        saturate_lattice([(0, 0)])


def test_hermite_normal_form_is_canonical():
    assert hermite_normal_form([(1, 0), (0, 1)]) == hermite_normal_form([(1, 1), (0, 1)])
    assert hermite_normal_form([(2, 4, 0), (0, 3, 3)]) == hermite_normal_form([(2, 7, 3), (0, -3, -3)])
    with pytest.raises(InvariantError):
        hermite_normal_form([(1, 2), (2, 4)])


def test_integer_kernel_is_saturated():
    kernel = integer_kernel([[2, 4]])
    assert len(kernel) == 1
    z = kernel[0]
    assert 2 * z[0] + 4 * z[1] == 0
    assert abs(z[0]) == 2 and abs(z[1]) == 1

    assert integer_kernel([[1, 0], [0, 1]]) == []
    assert len(integer_kernel([], width=3)) == 3


def test_restrict_examples():
    A = IntMatrix.of([[3, 1], [4, 1]])
    assert restrict(A, [(1, 0), (0, 1)]) == A
    assert restrict(IntMatrix.of([[2, 0], [0, 3]]), [(1, 0)]).entries == ((2,),)
    with pytest.raises(InvariantError, match="column 0"):
        restrict(IntMatrix.of([[0, 1], [1, 0]]), [(1, 0)])


def test_solve_in_span_and_coordinates():
    assert solve_in_span([(1, 0, 1), (0, 1, 0)], (2, 3, 2)) == (Fraction(2), Fraction(3))
    assert solve_in_span([(1, 0, 1)], (1, 0, 0)) is None

    V = cyclic_subspace(IntMatrix.of([[2, 1, 1], [1, 2, 1], [0, 0, 2]]), RatVector.of([1, 1, 0]))
    assert coordinates(V, (3, 3, 0)) == (Fraction(3),)
    with pytest.raises(InputError):
        coordinates(V, (1, 0, 0))


def test_rank():
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(1, 0, 0), (0, Fraction(1, 3), 0), (1, 1, 0)]) == 2


def test_project_remark_b_examples():
    A = IntMatrix.of([[2, 1], [1, 1]])
    v = RatVector.of([1, 0])
    assert project_remark_b(A, v) == (v, 0)

    v1, m = project_remark_b(IntMatrix.of([[0, 1], [0, 0]]), RatVector.of([1, 0]))
    assert v1.is_zero()
    assert m >= 1

    v1, m = project_remark_b(IntMatrix.of([[0, 0], [0, 2]]), RatVector.of([1, 1]))
    assert v1.entries == (Fraction(0), Fraction(1))
    assert m == 1


def test_project_remark_b_preserves_late_iterates():
    A = IntMatrix.of([[1, 1, 1], [1, 1, 0], [2, 2, 0]])
    v = RatVector.ones(3)
    v1, m = project_remark_b(A, v)
    assert m == 1
    left, right = v.entries, v1.entries
    for n in range(m + 3):
        if n >= m:
            assert tuple(left) == tuple(right)
        left, right = A.apply(left), A.apply(right)


def test_collatz_wielandt_examples(zeta_20):
    assert collatz_wielandt_lower(IntMatrix.of([[2]]), [1]) == 2
    assert collatz_wielandt_lower(FIBONACCI, [2, 1]) == Fraction(3, 2)
    assert collatz_wielandt_upper(FIBONACCI, [2, 1]) == 2

    S = substitution_matrix(zeta_20)
    u = S.power(30).apply((1, 1, 1))
    lower, upper = collatz_wielandt_lower(S, u), collatz_wielandt_upper(S, u)
    assert 40 < lower <= upper


def test_collatz_wielandt_rejects_invalid_input():
    with pytest.raises(InputError):
        collatz_wielandt_lower(IntMatrix.of([[1, -1], [1, 1]]), [1, 1])
    with pytest.raises(InputError):
        collatz_wielandt_lower(FIBONACCI, [1, 0])


def test_is_primitive(zeta_3):
    assert is_primitive(FIBONACCI)
    assert not is_primitive(IntMatrix.identity(2))
    assert not is_primitive(IntMatrix.of([[0, 1], [1, 0]]))
    assert is_primitive(substitution_matrix(zeta_3))
    with pytest.raises(InputError):
        is_primitive(IntMatrix.of([[1, -1], [1, 1]]))


def test_saturation_on_random_lattices():
    rng = random.Random(11)
    for _ in range(100):
        d = rng.randint(2, 4)
        generators = [_random_vector(rng, d) for _ in range(rng.randint(1, d))]
        basis = saturate_lattice(generators)

        assert saturate_lattice(basis) == basis
        assert len(basis) == rank(generators)
        assert all(solve_in_span(basis, g) is not None for g in generators)

        # 생성자의 정수 결합을 최대공약수로 나눈 벡터도 격자 좌표가 정수여야 합니다
        combo = [sum(rng.randint(-3, 3) * g[i] for g in generators) for i in range(d)]
        if not any(combo):
            continue
        g = np.gcd.reduce([abs(c) for c in combo])
        primitive = tuple(c // int(g) for c in combo)
        coords = solve_in_span(basis, primitive)
        assert coords is not None
        assert all(c.denominator == 1 for c in coords), (generators, basis, primitive)


def test_restriction_on_random_cyclic_subspaces():
    rng = random.Random(12)
    for _ in range(100):
        d = rng.randint(2, 4)
        A = _random_matrix(rng, d)
        V = cyclic_subspace(A, RatVector.of(_random_vector(rng, d)))
        B = V.restriction

        for j, g in enumerate(V.lattice_basis):
            assert tuple(A.apply(g)) == tuple(V.embed([B.entries[i][j] for i in range(V.rank)]))

        assert char_poly(A).poly.rem(char_poly(B).poly).is_zero, (A, V)


def test_project_remark_b_on_random_singular_matrices():
    rng = random.Random(13)
    checked = 0
    while checked < 100:
        d = rng.randint(2, 4)
        inner = rng.randint(1, d - 1)
        P = [[rng.randint(-2, 2) for _ in range(inner)] for _ in range(d)]
        Q = [[rng.randint(-2, 2) for _ in range(d)] for _ in range(inner)]
        A = IntMatrix.of([[sum(P[i][k] * Q[k][j] for k in range(inner)) for j in range(d)] for i in range(d)])
        v = RatVector.of(_random_vector(rng, d))
        checked += 1

        v1, m = project_remark_b(A, v)
        left, right = v.entries, v1.entries
        for n in range(m + 3):
            if n >= m:
                assert tuple(left) == tuple(right), (A, v, m)
            left, right = A.apply(left), A.apply(right)

        if not v1.is_zero():
            assert determinant(cyclic_subspace(A, v1).restriction) != 0


def test_collatz_wielandt_brackets_perron_root():
    rng = random.Random(14)
    checked = 0
    while checked < 100:
        d = rng.randint(2, 4)
        A = _random_matrix(rng, d, low=0, high=3)
        if not is_primitive(A):
            continue
        checked += 1
        u = [rng.randint(1, 9) for _ in range(d)]
        theta1 = max(abs(np.linalg.eigvals(A.to_numpy())))
        lower, upper = collatz_wielandt_lower(A, u), collatz_wielandt_upper(A, u)
        assert float(lower) <= theta1 + 1e-9
        assert theta1 <= float(upper) + 1e-9
