# 설계 방향 및 원칙:
# - 핵심 책임: 정수 행렬 A 와 유리수 벡터 v 에 대해 (Aⁿωv) mod 1 이 거의 모든 ω 에 대해 균등분포하는지 판정하고,
#              실패하는 경우 명시적인 정수 증거 h 를 만들며, 고정소수점 궤도의 Weyl 합으로 실험적으로 확인합니다.
# - 설계 원칙: 조건 판정과 증거 검증은 정확 연산으로만 수행합니다. 실험 결과는 통계적 근거로만 보고합니다.
# - 기술적 고려사항: 궤도는 P비트 정수로 정확히 진행하고 상위 53비트만 배정밀도로 변환합니다.
#                 Weyl 합은 진동수 h 묶음별로 numpy 로 벡터화하여 병렬 실행합니다.
# - 사용 시 고려사항: 유리수 v 는 원시 정수 벡터로 바꾼 뒤 ω 에 곱합니다 (ω 의 분포는 그대로 균등합니다).

import logging
import math
from collections import Counter
from fractions import Fraction
from itertools import product

import numpy as np
import sympy

from specto.cocycle import FixedPointTorusPoint
from specto.errors import InputError, InvariantError
from specto.linalg import IntMatrix, RatVector, char_poly, determinant, integer_kernel, krylov_vectors, solve_in_span
from specto.lyapunov import check_precision, working_precision
from specto.parallel import chunked_map, random_bits, sample_stream
from specto.polyalg import cyclotomic, has_unit_root, is_degenerate
from specto.settings.config import Settings

from .const import (
    MIN_OMEGA_DENOMINATOR_BITS,
    MULTIPLICITY_MAX_TERMS,
    VERIFY_TERMS,
    WEYL_BLOCK,
    WEYL_TOLERANCE,
    FailedCondition,
)
from .schema import EmpiricalUD, OmegaSample, RecurrenceSeq, UDVerdict, Witness

logger = logging.getLogger(__name__)

x = sympy.Symbol("x")


def _check_inputs(A: IntMatrix, v: RatVector) -> None:
    if v.dim != A.dim:
        raise InputError(f"vector dimension {v.dim} does not match matrix dimension {A.dim}")
    if v.is_zero():
        logger.error("equidistribution check called with the zero vector")
        raise InputError("vector must be non-zero")


def _primitive_integer(values) -> tuple[int, ...]:
    values = [Fraction(e) for e in values]
    denominator = math.lcm(*(e.denominator for e in values))
    scaled = [int(e * denominator) for e in values]
    g = math.gcd(*scaled)
    return tuple(e // g for e in scaled) if g else tuple(scaled)


def _pairing(w, h) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, h, strict=True)), Fraction(0))


def _solve_functional(A: IntMatrix, v: RatVector, targets: list[int]) -> tuple[int, ...]:
    """⟨Aⁱv, h⟩ = targetsᵢ (i < d) 를 풀고 h 를 원시 정수 벡터로 만듭니다."""
    d = A.dim
    iterates = krylov_vectors(A, v)
    if len(iterates) < d:
        raise InputError("iterates of v are linearly dependent")
    columns = [tuple(iterates[i][j] for i in range(d)) for j in range(d)]
    h = solve_in_span(columns, targets)
    if h is None:
        raise InvariantError("functional system has no solution")
    return _primitive_integer(h)


def ud_conditions(A: IntMatrix, v: RatVector) -> UDVerdict:
    """
    det A ≠ 0, {v, …, A^{d−1}v} 의 선형 독립, A 의 비퇴화, 1의 거듭제곱근 고유값 부재를 차례로 확인합니다.

    Args:
        A (IntMatrix): 정수 행렬.
        v (RatVector): 0이 아닌 유리수 벡터.

    Returns:
        UDVerdict: 모두 통과하면 holds=True. 퇴화와 단위근 고유값인 경우 증거 (h, k) 를 포함합니다.
    """
    _check_inputs(A, v)
    if determinant(A) == 0:
        return UDVerdict(holds=False, failed_condition=FailedCondition.SINGULAR, notes=["matrix is singular"])
    if len(krylov_vectors(A, v)) < A.dim:
        return UDVerdict(holds=False, failed_condition=FailedCondition.DEPENDENT_ITERATES, notes=["iterates of v span a proper subspace"])
    if (k := is_degenerate(A)) is not None:
        h = degenerate_witness(A, v, k)
        return UDVerdict(
            holds=False,
            failed_condition=FailedCondition.DEGENERATE,
            witness=Witness(h=list(h), k=k),
            notes=[f"two eigenvalues have a ratio of order {k}; <A^(kn) v, h> = 0 for all n"],
        )
    if (k := has_unit_root(char_poly(A))) is not None:
        h = unit_root_witness(A, v, k)
        return UDVerdict(
            holds=False,
            failed_condition=FailedCondition.UNIT_ROOT_EIGENVALUE,
            witness=Witness(h=list(h), k=k),
            notes=[f"a primitive {k}-th root of unity is an eigenvalue; <A^n v, h> has period {k}"],
        )
    return UDVerdict(holds=True)


def degenerate_witness(A: IntMatrix, v: RatVector, k: int) -> tuple[int, ...]:
    """
    퇴화 행렬에 대해 모든 n 에서 ⟨A^{kn}v, h⟩ = 0 인 정수 벡터 h 를 만듭니다.

    x_{ik} = Σ_j β_{ij}·x_j (β_i 는 x^{ik} mod p 의 계수) 로 표현되는 β 행렬의 정수 핵 벡터 z 를 구한 뒤
    ⟨Aⁱv, h⟩ = zᵢ 를 풀어 h 를 얻고, n ≤ 50 에서 정확히 검증합니다.

    Raises:
        InputError: A 가 비퇴화인 경우.
        InvariantError: β 의 핵이 비어 있거나 검증에 실패한 경우.
    """
    _check_inputs(A, v)
    if is_degenerate(A) is None:
        logger.error("degenerate_witness called for a non-degenerate matrix")
        raise InputError("matrix is not degenerate")
    d = A.dim
    p = char_poly(A).poly
    beta = []
    for i in range(d):
        remainder = sympy.Poly(x ** (i * k), x, domain=sympy.ZZ).rem(p)
        coeffs = [int(c) for c in reversed(remainder.all_coeffs())]
        beta.append(coeffs + [0] * (d - len(coeffs)))
    kernel = integer_kernel(beta)
    if not kernel:
        logger.error(f"beta matrix for k = {k} has an empty kernel")
        raise InvariantError("beta matrix has an empty kernel although the matrix is degenerate")
    h = _solve_functional(A, v, list(kernel[0]))
    step = A.power(k)
    current = v.entries
    for n in range(VERIFY_TERMS + 1):
        if _pairing(current, h) != 0:
            logger.error(f"degenerate witness {h} fails at n = {n}")
            raise InvariantError(f"witness verification failed at n = {n}")
        current = step.apply(current)
    logger.debug(f"degenerate witness h = {h} for k = {k}")
    return h


def unit_root_witness(A: IntMatrix, v: RatVector, k: int) -> tuple[int, ...]:
    """
    Φ_k 가 특성다항식을 나눌 때 ⟨Aⁿv, h⟩ 가 주기 k 인 정수 벡터 h 를 만듭니다.

    Φ_k 점화식을 따르는 수열 (1, 0, …, 0, …) 을 d 항까지 늘려 ⟨Aⁱv, h⟩ 의 목표값으로 사용합니다.
    """
    _check_inputs(A, v)
    phi = cyclotomic(k)
    p = char_poly(A)
    if not p.poly.rem(phi.poly).is_zero:
        logger.error(f"cyclotomic polynomial of order {k} does not divide {p}")
        raise InputError(f"Phi_{k} does not divide the characteristic polynomial")
    order = phi.degree
    relation = [-c for c in phi.coefficients[:order]]
    sequence = [1] + [0] * (order - 1)
    while len(sequence) < A.dim:
        sequence.append(sum(a * u for a, u in zip(relation, sequence[-order:], strict=True)))
    h = _solve_functional(A, v, sequence[: A.dim])
    shift = A.power(k)
    current = v.entries
    for n in range(VERIFY_TERMS + 1):
        if _pairing(shift.apply(current), h) != _pairing(current, h):
            logger.error(f"unit-root witness {h} is not {k}-periodic at n = {n}")
            raise InvariantError(f"witness verification failed at n = {n}")
        current = A.apply(current)
    return h


def orbit_mod1(A: IntMatrix, x0: FixedPointTorusPoint, N: int) -> np.ndarray:
    """
    x ↦ A·x mod 1 궤도를 정확히 진행하며 배정밀도 스냅샷을 반환합니다.

    Returns:
        np.ndarray: (N, r) 배열. 첫 행은 x0 입니다.
    """
    if x0.dim != A.dim:
        raise InputError(f"point has {x0.dim} coordinates, matrix has dimension {A.dim}")
    if N < 1:
        raise InputError(f"orbit length must be positive, got {N}")
    check_precision(A, x0, N)
    snapshots = np.empty((N, A.dim))
    point = x0
    for n in range(N):
        snapshots[n] = point.to_floats()
        point = point.apply(A)
    return snapshots


def _frequencies(r: int, H: int) -> np.ndarray:
    return np.array([h for h in product(range(-H, H + 1), repeat=r) if any(h)], dtype=float)


def weyl_sums(points: np.ndarray, H: int, threads: int | None = None) -> tuple[float, tuple[int, ...]]:
    """
    0 이 아닌 |h|∞ ≤ H 전체에 대해 |N⁻¹ Σₙ exp(2πi⟨h, xₙ⟩)| 의 최댓값과 그 h 를 구합니다.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    if len(points) < 1 or H < 1:
        raise InputError("weyl_sums needs at least one point and H >= 1")
    freqs = _frequencies(points.shape[1], H)
    block = max(1, WEYL_BLOCK // len(points))

    def run_chunk(_: int, start: int, stop: int) -> np.ndarray:
        phases = np.mod(points @ freqs[start:stop].T, 1.0)
        return np.abs(np.exp(2j * np.pi * phases).mean(axis=0))

    moduli = np.concatenate(chunked_map(run_chunk, len(freqs), block, threads))
    best = int(np.argmax(moduli))
    return float(moduli[best]), tuple(int(h) for h in freqs[best])


def subsample(points: np.ndarray, k: int, offset: int = 0) -> np.ndarray:
    """(x_{kn+ℓ}) 부분 수열입니다."""
    if k < 1 or offset < 0:
        raise InputError(f"subsampling needs k >= 1 and offset >= 0, got k = {k}, offset = {offset}")
    return points[offset::k]


def multiplicity_diagnostic(seq: RecurrenceSeq, N: int) -> int:
    """처음 N 개 항 중 값이 같은 쌍 (i < j) 의 개수를 정확히 셉니다."""
    if N > MULTIPLICITY_MAX_TERMS:
        raise InputError(f"multiplicity diagnostic is limited to {MULTIPLICITY_MAX_TERMS} terms, got {N}")
    counts = Counter(seq.terms(N))
    return sum(c * (c - 1) // 2 for c in counts.values())


def hit_frequency(A: IntMatrix, v: RatVector, h: tuple[int, ...], k: int, omega: FixedPointTorusPoint, N: int) -> float:
    """
    ⟨Aⁿv, h⟩·ω mod 1 ∈ [0, 1/(2k)] 인 n < N 의 비율을 정확한 정수 비교로 구합니다.

    v 는 원시 정수 벡터로 바꾸어 사용하며, ω = W/2^P 이므로 2k·(uₙ·W mod 2^P) ≤ 2^P 로 판정합니다.
    """
    _check_inputs(A, v)
    if omega.dim != 1:
        raise InputError("omega must be a single fixed-point coordinate")
    if k < 1 or N < 1:
        raise InputError("hit_frequency needs k >= 1 and N >= 1")
    modulus = 1 << omega.precision_bits
    W = omega.coordinates[0]
    current = _primitive_integer(v.entries)
    hits = 0
    for _ in range(N):
        u = sum(a * b for a, b in zip(current, h, strict=True))
        if 2 * k * (u * W % modulus) <= modulus:
            hits += 1
        current = A.apply(current)
    return hits / N


def _omega_point(v_int: tuple[int, ...], W: int, bits: int) -> FixedPointTorusPoint:
    mask = (1 << bits) - 1
    return FixedPointTorusPoint(bits, tuple(a * W & mask for a in v_int))


def _explicit_omega(value: Fraction | str, bits: int) -> int:
    omega = Fraction(value)
    if omega.denominator < 1 << MIN_OMEGA_DENOMINATOR_BITS:
        logger.error(f"omega {omega} has a small denominator")
        raise InputError(f"rational omega {omega} gives an eventually periodic orbit; use a denominator of at least 2^{MIN_OMEGA_DENOMINATOR_BITS}")
    return FixedPointTorusPoint.from_fractions([omega], bits).coordinates[0]


def ud_experiment(
    A: IntMatrix,
    v: RatVector,
    n_steps: int,
    h_max: int = 3,
    n_omegas: int = 10,
    seed: int | None = None,
    omegas: list[Fraction | str] | None = None,
    tolerance: float = WEYL_TOLERANCE,
    step: int = 1,
    offset: int = 0,
    precision_bits: int | None = None,
    threads: int | None = None,
) -> EmpiricalUD:
    """
    여러 ω 에 대해 (Aⁿωv) mod 1 궤도를 만들고 최대 Weyl 합이 tolerance 이하인 표본 수를 셉니다.

    ω 는 (seed, 표본 번호) 스트림에서 뽑은 P비트 수이며, P 는 설정 최솟값과 궤도에 필요한 비트 수 중 큰 값입니다.
    step, offset 을 주면 (A^{kn+ℓ}ωv) 부분 궤도를 검사합니다.
    """
    _check_inputs(A, v)
    seed = Settings.SPECTO_SEED if seed is None else seed
    bits = working_precision(A, n_steps, precision_bits)
    v_int = _primitive_integer(v.entries)
    words = [_explicit_omega(w, bits) for w in omegas] if omegas else None
    count = len(words) if words else n_omegas
    logger.info(f"equidistribution experiment: {count} omegas, {n_steps} steps, H = {h_max}, {bits} bits")

    def run_chunk(index: int, start: int, stop: int) -> list[OmegaSample]:
        samples = []
        for i in range(start, stop):
            W = words[i] if words else random_bits(sample_stream(seed, i), bits)
            orbit = subsample(orbit_mod1(A, _omega_point(v_int, W, bits), n_steps), step, offset)
            value, argmax = weyl_sums(orbit, h_max, threads=1)
            samples.append(OmegaSample(omega=W / (1 << bits), max_weyl_sum=value, argmax=list(argmax), passed=value <= tolerance))
        return samples

    samples = [s for chunk in chunked_map(run_chunk, count, 1, threads) for s in chunk]
    passed = sum(s.passed for s in samples)
    return EmpiricalUD(
        n_steps=n_steps,
        h_max=h_max,
        tolerance=tolerance,
        precision_bits=bits,
        seed=seed,
        step=step,
        offset=offset,
        samples=samples,
        passed=passed,
        majority_holds=2 * passed > len(samples),
    )
