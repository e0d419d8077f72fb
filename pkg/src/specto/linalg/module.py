# 설계 방향 및 원칙:
# - 핵심 책임: 무한 정밀도 정수/유리수 선형대수 (특성다항식, 순환 부분공간, 격자 포화, 제한 행렬, Perron 하한)를 제공합니다.
# - 설계 원칙: 모든 계산은 정확 연산(int, Fraction)으로 수행하며, 랭크 판정에 부동소수점을 사용하지 않습니다.
# - 기술적 고려사항: 확장 유클리드 호제법(sympy.igcdex)을 이용한 유니모듈러 열 연산으로 정수 핵과 Hermite 정규형을 구합니다.
#                 격자 포화는 dual 방식(직교 격자의 직교 격자)으로 계산합니다.
# - 사용 시 고려사항: d ≤ 12 정도의 작은 행렬을 대상으로 하며, 모든 함수는 불변 값에 대한 순수 함수입니다.

import logging
from collections.abc import Sequence
from fractions import Fraction
from math import lcm

import sympy
from sympy.core.intfunc import igcdex

from specto.errors import InputError, InvariantError

from .schema import IntMatrix, IntPoly, MinimalSubspace, RatVector

logger = logging.getLogger(__name__)


def char_poly(A: IntMatrix) -> IntPoly:
    """
    Faddeev–LeVerrier 점화식으로 det(xI − A)를 정확히 계산합니다.

    Args:
        A (IntMatrix): 정사각 정수 행렬.

    Returns:
        IntPoly: 차수 d의 monic 정수 다항식 (상수항부터).
    """
    n = A.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    M = IntMatrix.zeros(n)
    identity = IntMatrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + identity.scale(coeffs[n - k + 1])
        quotient, remainder = divmod(-(A @ M).trace(), k)
        if remainder:
            logger.error(f"Faddeev-LeVerrier step {k} is not integral")
            raise InvariantError(f"non-integral trace in characteristic polynomial step {k}")
        coeffs[n - k] = quotient
    return IntPoly(tuple(coeffs))


def determinant(A: IntMatrix) -> int:
    p = char_poly(A)
    return (-1) ** A.dim * p.coefficients[0] if p.coefficients else 0


def poly_at_matrix(coefficients: Sequence[int], A: IntMatrix) -> IntMatrix:
    """Horner 방식으로 p(A)를 계산합니다. 계수는 상수항부터 나열합니다."""
    result = IntMatrix.zeros(A.dim)
    identity = IntMatrix.identity(A.dim)
    for c in reversed(coefficients):
        result = A @ result + identity.scale(int(c))
    return result


def rank(vectors: Sequence[Sequence[int | Fraction]]) -> int:
    """유리수 소거로 벡터 집합의 랭크를 정확히 구합니다."""
    return len(_row_echelon([list(map(Fraction, v)) for v in vectors]))


def _row_echelon(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    width = len(rows[0])
    echelon: list[list[Fraction]] = []
    col = 0
    while rows and col < width:
        pivot = next((r for r in rows if r[col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        reduced = []
        for r in rows:
            if r[col] != 0:
                f = r[col] / pivot[col]
                r = [a - f * b for a, b in zip(r, pivot, strict=True)]
            if any(r):
                reduced.append(r)
        rows = reduced
        echelon.append(pivot)
        col += 1
    return echelon


def solve_in_span(columns: Sequence[Sequence[int | Fraction]], target: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """
    columns·c = target 을 만족하는 유일한 유리수 계수 c를 구합니다.

    Args:
        columns: 선형 독립인 열벡터들.
        target: 목표 벡터.

    Returns:
        tuple[Fraction, ...] | None: 해가 없으면 None.
    """
    r = len(columns)
    d = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(r)] + [Fraction(target[i])] for i in range(d)]
    pivots: list[int] = []
    row = 0
    for col in range(r):
        pivot = next((i for i in range(row, d) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [a * inv for a in aug[row]]
        for i in range(d):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row], strict=True)]
        pivots.append(col)
        row += 1
    if any(aug[i][r] != 0 for i in range(row, d)):
        return None
    if len(pivots) != r:
        logger.error(f"solve_in_span called with {r} dependent columns")
        raise InvariantError("columns are linearly dependent")
    return tuple(aug[i][r] for i in range(r))


def integer_kernel(rows: Sequence[Sequence[int]], width: int | None = None) -> list[tuple[int, ...]]:
    """
    정수 행렬 M의 정수 핵 {x ∈ Z^n : Mx = 0} 의 포화된 기저를 구합니다.

    유니모듈러 열 연산으로 M을 열 사다리꼴로 만들면서 같은 연산을 단위행렬 U에 누적합니다.
    사다리꼴에서 0이 된 열에 대응하는 U의 열이 핵 격자의 기저가 됩니다.

    Args:
        rows: m×n 정수 행렬 (행 단위).
        width: 행이 없을 때의 열 수 n.

    Returns:
        list[tuple[int, ...]]: 핵 격자 기저 (열벡터 목록).
    """
    n = len(rows[0]) if rows else width
    if n is None:
        raise InputError("integer_kernel needs a width for an empty matrix")
    W = [[int(rows[i][j]) for i in range(len(rows))] for j in range(n)]
    U = [[int(i == j) for i in range(n)] for j in range(n)]
    piv = 0
    for i in range(len(rows)):
        if piv == n:
            break
        for j in range(piv + 1, n):
            b = W[j][i]
            if b == 0:
                continue
            a = W[piv][i]
            x, y, g = (int(t) for t in igcdex(a, b))
            W[piv], W[j] = _combine(W[piv], W[j], x, y, -b // g, a // g)
            U[piv], U[j] = _combine(U[piv], U[j], x, y, -b // g, a // g)
        if W[piv][i] != 0:
            piv += 1
    return [tuple(U[j]) for j in range(piv, n)]


def _combine(p: list[int], q: list[int], x: int, y: int, s: int, t: int) -> tuple[list[int], list[int]]:
    return [x * a + y * b for a, b in zip(p, q, strict=True)], [s * a + t * b for a, b in zip(p, q, strict=True)]


def hermite_normal_form(columns: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """
    선형 독립인 정수 열벡터들이 생성하는 격자의 표준 열 Hermite 정규형을 구합니다.

    각 열의 pivot은 양수이고, 앞선 열의 같은 행 성분은 pivot으로 나눈 나머지로 축약됩니다.
    같은 격자는 항상 같은 결과를 냅니다.
    """
    cols = [[int(e) for e in c] for c in columns]
    r = len(cols)
    if r == 0:
        return ()
    d = len(cols[0])
    piv = 0
    for i in range(d):
        if piv == r:
            break
        for j in range(piv + 1, r):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[piv][i]
            x, y, g = (int(t) for t in igcdex(a, b))
            cols[piv], cols[j] = _combine(cols[piv], cols[j], x, y, -b // g, a // g)
        p = cols[piv][i]
        if p == 0:
            continue
        if p < 0:
            cols[piv] = [-e for e in cols[piv]]
            p = -p
        for s in range(piv):
            f = cols[s][i] // p
            if f:
                cols[s] = [e - f * q for e, q in zip(cols[s], cols[piv], strict=True)]
        piv += 1
    if piv != r:
        logger.error(f"hermite_normal_form received {r} columns of rank {piv}")
        raise InvariantError("columns are linearly dependent")
    return tuple(tuple(c) for c in cols)


def saturate_lattice(generators: Sequence[Sequence[int | Fraction]]) -> tuple[tuple[int, ...], ...]:
    """
    유리수 생성자들이 펼치는 부분공간 Span과 Z^d의 교집합의 기저를 구합니다.

    Args:
        generators: 유리수 열벡터들.

    Returns:
        tuple[tuple[int, ...], ...]: Span ∩ Z^d 의 기저 (표준 Hermite 정규형).
    """
    if not generators:
        logger.error("saturate_lattice called without generators")
        raise InputError("no generators given")
    d = len(generators[0])
    cleared = []
    for g in generators:
        g = [Fraction(e) for e in g]
        if len(g) != d:
            raise InputError("generators have different dimensions")
        denominator = lcm(*(e.denominator for e in g))
        cleared.append([int(e * denominator) for e in g])
    if all(not any(g) for g in cleared):
        logger.error("saturate_lattice called with only zero generators")
        raise InputError("generators span the zero subspace")
    orthogonal = integer_kernel(cleared, width=d)
    basis = integer_kernel(orthogonal, width=d)
    return hermite_normal_form(basis)


def restrict(A: IntMatrix, basis: Sequence[Sequence[int]]) -> IntMatrix:
    """
    A-불변 부분공간의 격자 기저에 대한 제한 행렬 B (A·G = G·B)를 구합니다.

    Raises:
        InvariantError: 부분공간이 A-불변이 아니거나 기저가 포화되지 않은 경우. 위반한 열을 명시합니다.
    """
    columns: list[list[int]] = []
    for j, g in enumerate(basis):
        image = A.apply(g)
        coords = solve_in_span(basis, image)
        if coords is None:
            logger.error(f"A·g_{j} leaves the subspace spanned by the basis")
            raise InvariantError(f"subspace is not invariant: column {j} maps outside the span")
        if any(c.denominator != 1 for c in coords):
            logger.error(f"A·g_{j} has non-integral coordinates {coords}")
            raise InvariantError(f"basis is not saturated: column {j} has non-integral coordinates")
        columns.append([int(c) for c in coords])
    r = len(basis)
    return IntMatrix(tuple(tuple(columns[j][i] for j in range(r)) for i in range(r)))


def krylov_vectors(A: IntMatrix, v: RatVector) -> list[tuple[Fraction, ...]]:
    """v, Av, A²v, … 중 선형 독립인 앞부분을 반환합니다."""
    iterates: list[tuple[Fraction, ...]] = []
    current = v.entries
    for _ in range(A.dim):
        candidate = iterates + [current]
        if rank(candidate) < len(candidate):
            break
        iterates = candidate
        current = A.apply(current)
    return iterates


def cyclic_subspace(A: IntMatrix, v: RatVector) -> MinimalSubspace:
    """
    v의 최소 부분공간 Span{v, Av, …, A^{d−1}v}를 포화된 격자 기저와 함께 구합니다.

    Args:
        A (IntMatrix): 정수 행렬 (보통 S_ζᵗ).
        v (RatVector): 0이 아닌 유리수 벡터.

    Returns:
        MinimalSubspace: 랭크, 격자 기저, 정수 제한 행렬.
    """
    if v.dim != A.dim:
        raise InputError(f"vector dimension {v.dim} does not match matrix dimension {A.dim}")
    if v.is_zero():
        logger.error("cyclic_subspace called with the zero vector")
        raise InputError("vector must be non-zero")
    iterates = krylov_vectors(A, v)
    basis = saturate_lattice(iterates)
    restriction = restrict(A, basis)
    logger.debug(f"cyclic subspace of rank {len(basis)} in dimension {A.dim}")
    return MinimalSubspace(ambient_dim=A.dim, rank=len(basis), lattice_basis=basis, restriction=restriction)


def subspace_from_basis(A: IntMatrix, basis: Sequence[Sequence[int]]) -> MinimalSubspace:
    """이미 구한 정수 생성자로부터 포화 기저와 제한 행렬을 갖는 부분공간을 만듭니다."""
    saturated = saturate_lattice(basis)
    return MinimalSubspace(ambient_dim=A.dim, rank=len(saturated), lattice_basis=saturated, restriction=restrict(A, saturated))


def coordinates(subspace: MinimalSubspace, w: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
    """
    벡터 w의 격자 기저 좌표를 정확히 구합니다.

    Raises:
        InputError: w가 부분공간에 속하지 않는 경우.
    """
    coords = solve_in_span(subspace.lattice_basis, w)
    if coords is None:
        raise InputError("vector is not in the subspace")
    return coords


def project_remark_b(A: IntMatrix, v: RatVector) -> tuple[RatVector, int]:
    """
    v의 최소 부분공간에서 고유값 0의 일반화 고유공간 성분을 제거한 벡터 v₁을 구합니다.

    A|_V의 특성다항식이 x^m·q(x) (q(0) ≠ 0) 일 때, a·x^m + b·q = 1 인 Bézout 계수로
    v₁ = a(A)·A^m·v 를 계산합니다. 모든 n ≥ m 에 대해 Aⁿv = Aⁿv₁ 입니다.

    Returns:
        tuple[RatVector, int]: (v₁, m). m = 0 이면 v를 그대로 반환합니다.
    """
    V = cyclic_subspace(A, v)
    p = char_poly(V.restriction)
    m = next(i for i, c in enumerate(p.coefficients) if c != 0)
    if m == 0:
        return v, 0
    x = sympy.Symbol("x")
    q = sympy.Poly(list(reversed(p.coefficients[m:])), x, domain=sympy.QQ)
    xm = sympy.Poly(x**m, x, domain=sympy.QQ)
    a, _, h = xm.gcdex(q)
    if h.as_expr() != 1:
        logger.error(f"gcd(x^{m}, q) = {h.as_expr()} is not 1")
        raise InvariantError("Bezout identity failed for the nilpotent split")
    shifted = v.entries
    for _ in range(m):
        shifted = A.apply(shifted)
    result = (Fraction(0),) * A.dim
    for c in a.all_coeffs():
        c = sympy.Rational(c)
        result = tuple(r + Fraction(int(c.p), int(c.q)) * s for r, s in zip(A.apply(result), shifted, strict=True))
    logger.info(f"removed nilpotent part of order {m} from the minimal subspace")
    return RatVector(tuple(Fraction(e) for e in result)), m


def collatz_wielandt_lower(A: IntMatrix, u: Sequence[int | Fraction]) -> Fraction:
    """
    양의 벡터 u에 대한 Collatz–Wielandt 하한 minᵢ (Au)ᵢ/uᵢ 를 구합니다. θ₁의 엄밀한 하한입니다.

    Args:
        A (IntMatrix): 비음수 정수 행렬.
        u: 양의 유리수 벡터.

    Returns:
        Fraction: θ₁ 이하의 유리수.
    """
    return min(_collatz_wielandt_ratios(A, u))


def collatz_wielandt_upper(A: IntMatrix, u: Sequence[int | Fraction]) -> Fraction:
    """양의 벡터 u에 대한 상한 maxᵢ (Au)ᵢ/uᵢ 를 구합니다."""
    return max(_collatz_wielandt_ratios(A, u))


def _collatz_wielandt_ratios(A: IntMatrix, u: Sequence[int | Fraction]) -> list[Fraction]:
    if not A.is_nonnegative():
        logger.error("Collatz-Wielandt bound requested for a matrix with negative entries")
        raise InputError("matrix must be entrywise non-negative")
    u = [Fraction(e) for e in u]
    if len(u) != A.dim or any(e <= 0 for e in u):
        raise InputError("Collatz-Wielandt vector must be strictly positive")
    image = A.apply(u)
    return [Fraction(a) / b for a, b in zip(image, u, strict=True)]


def is_primitive(A: IntMatrix) -> bool:
    """
    Wielandt 지수 (d−1)²+1 제곱이 모든 성분에서 양수인지 부울 행렬 거듭제곱으로 판정합니다.
    """
    if not A.is_nonnegative():
        logger.error("is_primitive requested for a matrix with negative entries")
        raise InputError("matrix must be entrywise non-negative")
    d = A.dim
    pattern = IntMatrix(tuple(tuple(int(a > 0) for a in row) for row in A.entries))
    exponent = (d - 1) ** 2 + 1
    result = None
    base = pattern
    while exponent:
        if exponent & 1:
            result = base if result is None else _boolean(result @ base)
        base = _boolean(base @ base)
        exponent >>= 1
    return all(a > 0 for row in result.entries for a in row)


def _boolean(M: IntMatrix) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(a > 0) for a in row) for row in M.entries))
