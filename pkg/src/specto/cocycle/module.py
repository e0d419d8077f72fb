# 설계 방향 및 원칙:
# - 핵심 책임: 스펙트럼 코사이클 M_ζ 와 최소 부분공간 위의 본질 코사이클 M̃_ζ 를 정확히 구성하고 수치 평가합니다.
# - 설계 원칙: 진동수는 정수 벡터의 중복집합으로 보관하여 평가와 Laurent 다항식 변환을 모두 정확하게 지원합니다.
# - 기술적 고려사항: 평가는 numpy로 벡터화하며, 고정소수점 점의 궤도는 정수 연산으로 정확히 진행합니다.
# - 사용 시 고려사항: S_ζ 가 특이한 경우 전체 토러스 위의 반복은 진단용으로만 사용합니다.

import logging
from collections import Counter

import numpy as np

from specto.errors import InputError
from specto.linalg import IntMatrix, MinimalSubspace
from specto.substitution import Substitution

from .schema import FixedPointTorusPoint, SymbolMatrix, TorusPoint

logger = logging.getLogger(__name__)


def _freeze(counters: dict[tuple[int, int], Counter]) -> dict:
    return {key: tuple(sorted(counter.items())) for key, counter in counters.items() if counter}


def build_symbol(zeta: Substitution) -> SymbolMatrix:
    """
    M_ζ 의 기호 행렬을 만듭니다. ζ(b)의 j번째 문자가 c이면 접두사 u₁…u_{j−1}의
    아벨화 벡터를 (b, c) 성분에 추가합니다.
    """
    d = zeta.alphabet_size
    counters: dict[tuple[int, int], Counter] = {}
    for b, rule in enumerate(zeta.rules):
        prefix = [0] * d
        for c in rule:
            counters.setdefault((b, c), Counter())[tuple(prefix)] += 1
            prefix[c] += 1
    return SymbolMatrix(dim=d, num_vars=d, entries=_freeze(counters))


def essential_symbol(sym: SymbolMatrix, V: MinimalSubspace) -> SymbolMatrix:
    """
    진동수 f ∈ Z^d 를 Gᵗf ∈ Z^r 로 옮겨 격자 좌표에서의 본질 코사이클을 만듭니다.
    ⟨f, G·s⟩ = ⟨Gᵗf, s⟩ 이므로 결과는 정수 진동수를 가지며 Z^r-주기적입니다.
    """
    if sym.num_vars != V.ambient_dim:
        raise InputError(f"symbol has {sym.num_vars} variables but the subspace lives in dimension {V.ambient_dim}")
    basis = V.lattice_basis
    counters: dict[tuple[int, int], Counter] = {}
    for key, terms in sym.entries.items():
        counter = counters.setdefault(key, Counter())
        for freq, mult in terms:
            image = tuple(sum(g * f for g, f in zip(column, freq, strict=True)) for column in basis)
            counter[image] += mult
    return SymbolMatrix(dim=sym.dim, num_vars=V.rank, entries=_freeze(counters))


def cocycle_product(
    sym: SymbolMatrix,
    E: IntMatrix,
    s: TorusPoint | FixedPointTorusPoint,
    n: int,
) -> np.ndarray:
    """
    M(Eⁿ⁻¹s)···M(Es)·M(s) 를 계산합니다. 궤도는 x ↦ Ex mod 1 로 진행합니다.

    Args:
        sym (SymbolMatrix): 기호 행렬.
        E (IntMatrix): sym의 변수와 같은 차원의 정수 행렬 (S_ζᵗ 또는 B).
        s: 시작점. 고정소수점 점이면 궤도를 정확히 진행합니다.
        n (int): 곱의 길이 (1 이상).

    Returns:
        np.ndarray: (d, d) 복소 행렬.
    """
    if E.dim != sym.num_vars or s.dim != sym.num_vars:
        logger.error(f"cocycle dimensions disagree: symbol {sym.num_vars}, matrix {E.dim}, point {s.dim}")
        raise InputError("dimension mismatch between symbol, matrix and point")
    if n < 1:
        raise InputError(f"cocycle length must be at least 1, got {n}")
    product = np.eye(sym.dim, dtype=complex)
    if isinstance(s, FixedPointTorusPoint):
        point = s
        for _ in range(n):
            product = sym.evaluate_at(point.to_floats()) @ product
            point = point.apply(E)
        return product
    E_array = E.to_numpy()
    point = np.array(s.coordinates, dtype=float)
    for _ in range(n):
        product = sym.evaluate_at(point) @ product
        point = np.mod(E_array @ point, 1.0)
    return product
