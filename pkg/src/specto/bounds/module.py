# 설계 방향 및 원칙:
# - 핵심 책임: Gram Laurent 다항식과 본질 Lyapunov 지수 χ 의 상한 (Jensen–Parseval 상수항, Mahler 측도 0 인수 곱하기,
#              majorant 격자 검사, Monte Carlo 구적) 을 계산합니다.
# - 설계 원칙: 엄밀한 상한은 정수 상수항에서만 나오며, 격자 검사와 Monte Carlo 결과는 rigorous=False 로 표시합니다.
# - 기술적 고려사항: ∫ log|w^a − 1|² = 0 이므로 ∫ log‖M̃‖² = ∫ log(‖M̃‖²·|P|²) 이고, 각 성분을 P = Π(w^a − 1) 로
#                 곱한 분자 형태에서 Parseval 로 상수항을 구합니다.
# - 사용 시 고려사항: k > 1 상한은 ζ^k 를 직접 만들어 계산하므로 단어 길이 상한의 영향을 받습니다.

import logging
import math
from itertools import combinations

import numpy as np

from specto.cocycle import SymbolMatrix, build_symbol, essential_symbol
from specto.errors import ClearingError, GridViolationError, InputError, InvariantError
from specto.linalg import IntMatrix, MinimalSubspace
from specto.parallel import chunked_map, mean_and_std_error, sample_stream
from specto.settings.config import Settings
from specto.substitution import Substitution, power

from .const import GRID_SLACK, BoundMethod
from .laurent import ClearingFactor, LaurentPoly
from .schema import BoundCertificate

logger = logging.getLogger(__name__)

GRID_CHUNK = 8192


def entry_polynomial(sym: SymbolMatrix, b: int, c: int) -> LaurentPoly:
    """(b, c) 성분을 Laurent 다항식 Σ mult·z^f 로 변환합니다."""
    return LaurentPoly(sym.num_vars, dict(sym.entry(b, c)))


def gram_polynomial(sym: SymbolMatrix) -> LaurentPoly:
    """
    ‖M(s)‖²_F 와 같은 정수 계수 Laurent 다항식 Σ_{b,c} E_bc·conj(E_bc) 를 구합니다.

    Args:
        sym (SymbolMatrix): 기호 행렬.

    Returns:
        LaurentPoly: 켤레 대칭인 Gram 다항식.
    """
    total = LaurentPoly(sym.num_vars)
    for b, c in sorted(sym.entries):
        total = total + entry_polynomial(sym, b, c).squared_modulus()
    return total


def gram_constant_term(sym: SymbolMatrix) -> int:
    """Gram 다항식의 상수항 Σ_{b,c} Σ_f mult(f)² 입니다."""
    return sum(mult * mult for terms in sym.entries.values() for _, mult in terms)


def symbol_for_power(zeta: Substitution, V: MinimalSubspace, k: int) -> SymbolMatrix:
    """ζ^k 의 본질 기호 행렬을 V 위에서 만듭니다."""
    return essential_symbol(build_symbol(power(zeta, k)), V)


def jensen_bound(zeta: Substitution, V: MinimalSubspace, k: int = 1) -> BoundCertificate:
    """
    χ ≤ (1/2k)·log(ζ^k 본질 Gram 다항식의 상수항) 을 계산합니다.

    Jensen 부등식 ∫ log f ≤ log ∫ f 와 Parseval 항등식 ∫‖M̃(·,k)‖² = 상수항 에 근거한 엄밀한 상한입니다.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    sym = symbol_for_power(zeta, V, k)
    constant = gram_constant_term(sym)
    return BoundCertificate(
        bound=math.log(constant) / (2 * k),
        constant_term=constant,
        k=k,
        method=BoundMethod.JENSEN,
        rigorous=True,
    )


def detect_geometric_runs(sym: SymbolMatrix) -> list[ClearingFactor]:
    """
    각 성분 안에서 길이 2 이상의 극대 등차 진동수 열 f, f+w, …, f+(a−1)w 중 가장 긴 것을 찾아
    |w−1|² 꼴의 clearing factor 를 제안합니다. 제안은 휴리스틱이며 cleared_jensen_bound 가 검증합니다.

    Returns:
        list[ClearingFactor]: 중복 없는 제안 목록 (성분 순서).
    """
    proposals: list[ClearingFactor] = []
    for key in sorted(sym.entries):
        freqs = sorted(f for f, _ in sym.entries[key])
        present = set(freqs)
        best_length, best_step = 1, None
        for i, f in enumerate(freqs):
            for g in freqs[i + 1 :]:
                step = tuple(b - a for a, b in zip(f, g, strict=True))
                if tuple(a - s for a, s in zip(f, step, strict=True)) in present:
                    continue
                length, current = 2, g
                while (nxt := tuple(a + s for a, s in zip(current, step, strict=True))) in present:
                    length, current = length + 1, nxt
                if length > best_length:
                    best_length, best_step = length, step
        if best_step is not None:
            factor = ClearingFactor.from_step(best_step)
            logger.debug(f"entry {key}: run of length {best_length} with step {best_step}")
            if factor not in proposals:
                proposals.append(factor)
    return proposals


def merge_clearings(proposals: list[ClearingFactor]) -> list[ClearingFactor]:
    """같은 방향의 제안을 위수의 최소공배수로 합칩니다."""
    merged: dict[tuple[int, ...], int] = {}
    for factor in proposals:
        merged[factor.monomial] = math.lcm(merged.get(factor.monomial, 1), factor.order)
    return [ClearingFactor(monomial, order) for monomial, order in merged.items()]


def _validate_clearings(clearings: list[ClearingFactor], num_vars: int) -> None:
    for index, factor in enumerate(clearings):
        if len(factor.monomial) != num_vars:
            logger.error(f"clearing {index} has {len(factor.monomial)} coordinates, expected {num_vars}")
            raise ClearingError(f"clearing {index} has the wrong number of variables", index=index)
        if not any(factor.monomial) or factor.order < 1:
            logger.error(f"clearing {index} is trivial: {factor}")
            raise ClearingError(f"clearing {index} must have a non-zero monomial and order >= 1", index=index)


def clearing_product(clearings: list[ClearingFactor], num_vars: int) -> LaurentPoly:
    """P = Π (w_i^{a_i} − 1) 입니다."""
    product = LaurentPoly.constant(num_vars, 1)
    for factor in clearings:
        product = product * factor.numerator()
    return product


def cleared_constant_term(sym: SymbolMatrix, clearings: list[ClearingFactor]) -> int:
    """Σ_{b,c} ‖E_bc·P‖² 즉 ‖M‖²·|P|² 의 상수항입니다."""
    _validate_clearings(clearings, sym.num_vars)
    if not clearings:
        return gram_constant_term(sym)
    P = clearing_product(clearings, sym.num_vars)
    return sum((entry_polynomial(sym, b, c) * P).l2_squared() for b, c in sym.entries)


def cleared_polynomial(sym: SymbolMatrix, clearings: list[ClearingFactor]) -> LaurentPoly:
    """
    각 성분을 분자 형태 E_bc·P 로 다시 쓴 뒤 전개한 C = Σ |E_bc·P|² 를 구하고,
    C = gram·Π|w^a − 1|² 가 정확히 성립하는지 확인합니다.
    """
    _validate_clearings(clearings, sym.num_vars)
    P = clearing_product(clearings, sym.num_vars)
    cleared = LaurentPoly(sym.num_vars)
    for b, c in sorted(sym.entries):
        cleared = cleared + (entry_polynomial(sym, b, c) * P).squared_modulus()
    expected = gram_polynomial(sym)
    for factor in clearings:
        expected = expected * factor.polynomial()
    if cleared != expected:
        logger.error("cleared polynomial differs from gram times the clearing factors")
        raise InvariantError("cleared polynomial does not reproduce gram * prod |w^a - 1|^2")
    return cleared


def cleared_jensen_bound(sym: SymbolMatrix, clearings: list[ClearingFactor], k: int = 1, verify: bool = True) -> BoundCertificate:
    """
    Mahler 측도가 0인 인수를 곱한 Gram 다항식으로 χ 상한 (1/2k)·log(C의 상수항) 을 계산합니다.

    Args:
        sym (SymbolMatrix): ζ^k 의 본질 기호 행렬.
        clearings (list[ClearingFactor]): 곱할 인수들. 비어 있으면 jensen 상한과 같습니다.
        k (int): sym이 나타내는 거듭제곱.
        verify (bool): C = gram·Π|w^a − 1|² 를 전개하여 확인할지 여부.

    Returns:
        BoundCertificate: method는 clearings가 있으면 cleared, 없으면 jensen.
    """
    if verify and clearings:
        constant = cleared_polynomial(sym, clearings).constant_term
    else:
        constant = cleared_constant_term(sym, clearings)
    if constant <= 0:
        raise InvariantError("cleared constant term must be positive")
    return BoundCertificate(
        bound=math.log(constant) / (2 * k),
        constant_term=constant,
        k=k,
        method=BoundMethod.CLEARED if clearings else BoundMethod.JENSEN,
        rigorous=True,
        clearings=[factor.to_json() for factor in clearings],
    )


def best_cleared_bound(sym: SymbolMatrix, proposals: list[ClearingFactor], k: int = 1) -> BoundCertificate:
    """
    합친 제안들의 모든 부분집합 (빈 집합 포함) 중 상수항이 가장 작은 것을 골라 검증된 인증서를 만듭니다.
    """
    merged = merge_clearings(proposals)
    limit = Settings.SPECTO_MAX_CLEARING_SUBSETS
    best: tuple[int, tuple[ClearingFactor, ...]] | None = None
    tried = 0
    for size in range(len(merged) + 1):
        for subset in combinations(merged, size):
            if tried >= limit:
                break
            tried += 1
            constant = cleared_constant_term(sym, list(subset))
            if best is None or constant < best[0]:
                best = (constant, subset)
    logger.info(f"best cleared constant term {best[0]} using {len(best[1])} of {len(merged)} clearings ({tried} subsets)")
    return cleared_jensen_bound(sym, list(best[1]), k=k)


def grid_points(num_vars: int, per_axis: int | None = None) -> tuple[int, int]:
    """(축당 점 수, 전체 점 수) 를 정합니다."""
    if per_axis is None:
        if num_vars <= 2:
            per_axis = Settings.SPECTO_GRID_PER_AXIS
        else:
            per_axis = max(2, int(Settings.SPECTO_GRID_MAX_POINTS ** (1 / num_vars)))
    return per_axis, per_axis**num_vars


def majorant_bound(
    sym: SymbolMatrix,
    majorant: LaurentPoly,
    clearings: list[ClearingFactor],
    k: int = 1,
    per_axis: int | None = None,
) -> BoundCertificate:
    """
    격자 위에서 ‖M̃(s)‖² ≤ majorant(s) 를 확인한 뒤 (1/2k)·log(cleared majorant 의 상수항) 을 반환합니다.
    격자 검사는 증명이 아니므로 rigorous=False 입니다.

    Raises:
        GridViolationError: majorant 가 격자점에서 Gram 값보다 작은 경우. 가장 심한 점을 포함합니다.
    """
    if majorant.num_vars != sym.num_vars:
        raise InputError(f"majorant has {majorant.num_vars} variables, symbol has {sym.num_vars}")
    _validate_clearings(clearings, sym.num_vars)
    per_axis, total = grid_points(sym.num_vars, per_axis)
    shape = (per_axis,) * sym.num_vars
    worst_excess, worst_point = -math.inf, None
    for start in range(0, total, GRID_CHUNK):
        index = np.arange(start, min(start + GRID_CHUNK, total))
        points = np.stack(np.unravel_index(index, shape), axis=1) / per_axis
        gram = sym.frobenius_squared(points)
        bound = majorant.evaluate(points).real
        excess = gram - bound - GRID_SLACK * np.maximum(1.0, np.abs(bound))
        i = int(np.argmax(excess))
        if excess[i] > worst_excess:
            worst_excess, worst_point = float(excess[i]), tuple(float(v) for v in points[i])
    if worst_excess > 0:
        logger.error(f"majorant violated at {worst_point} by {worst_excess}")
        raise GridViolationError(f"majorant is below the gram polynomial at {worst_point}", point=worst_point, excess=worst_excess)
    cleared = majorant
    for factor in clearings:
        cleared = cleared * factor.polynomial()
    constant = cleared.constant_term
    if constant <= 0:
        raise InvariantError("cleared majorant must have a positive constant term")
    logger.info(f"majorant grid check passed on {total} points, cleared constant term {constant}")
    return BoundCertificate(
        bound=math.log(constant) / (2 * k),
        constant_term=constant,
        k=k,
        method=BoundMethod.MAJORANT_GRID,
        rigorous=False,
        clearings=[factor.to_json() for factor in clearings],
        grid_points=total,
    )


def quadrature_log_norm(
    sym: SymbolMatrix,
    E: IntMatrix,
    k: int,
    samples: int,
    seed: int,
    threads: int | None = None,
) -> tuple[float, float]:
    """
    (1/k)·∫ log‖M̃(s, k)‖ dm 의 Monte Carlo 추정값과 표준오차를 구합니다.

    표본은 (seed, 청크 번호) 로 결정되는 고정 크기 청크에서 뽑으므로 실행 순서와 무관합니다.
    """
    if samples < 100:
        raise InputError(f"quadrature needs at least 100 samples, got {samples}")
    if E.dim != sym.num_vars:
        raise InputError("matrix dimension must match the number of symbol variables")
    E_array = E.to_numpy()
    r = sym.num_vars

    def run_chunk(index: int, start: int, stop: int) -> list[float]:
        rng = sample_stream(seed, index)
        points = rng.random((stop - start, r))
        product = np.broadcast_to(np.eye(sym.dim, dtype=complex), (stop - start, sym.dim, sym.dim))
        for _ in range(k):
            product = sym.evaluate(points) @ product
            points = np.mod(points @ E_array.T, 1.0)
        norms = np.sqrt(np.sum(np.abs(product) ** 2, axis=(1, 2)))
        return (np.log(np.maximum(norms, np.finfo(float).tiny)) / k).tolist()

    chunks = chunked_map(run_chunk, samples, Settings.SPECTO_MC_CHUNK, threads)
    return mean_and_std_error([v for chunk in chunks for v in chunk])


def quadrature_bound(sym: SymbolMatrix, E: IntMatrix, k: int, samples: int, seed: int, threads: int | None = None) -> BoundCertificate:
    """quadrature_log_norm 결과를 monte-carlo 인증서로 감쌉니다."""
    estimate, std_error = quadrature_log_norm(sym, E, k, samples, seed, threads)
    return BoundCertificate(
        bound=estimate,
        k=k,
        method=BoundMethod.MONTE_CARLO,
        rigorous=False,
        std_error=std_error,
        seed=seed,
        samples=samples,
    )


def mahler_midpoint(n: int = 4096) -> float:
    """∫ log|e(t) − 1|² dt 의 중점 규칙 근사입니다 (정확한 값은 0)."""
    t = (np.arange(n) + 0.5) / n
    values = np.log(np.abs(np.exp(-2j * np.pi * t) - 1.0) ** 2)
    return math.fsum(values.tolist()) / n
