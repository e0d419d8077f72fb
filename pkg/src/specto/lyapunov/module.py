# 설계 방향 및 원칙:
# - 핵심 책임: 본질 코사이클의 a.e. Lyapunov 지수 χ 를 Monte Carlo 로 추정하고, 주어진 궤도 위의 상극한 지수 χ⁺ 를 근사합니다.
# - 설계 원칙: 궤도는 고정소수점 정수 연산으로 정확히 진행하고, 행렬 곱은 매 단계 Frobenius 노름으로 정규화합니다.
# - 기술적 고려사항: 표본은 청크 단위로 numpy 벡터화하며, 로그 누적은 math.fsum (점별 지수는 보정 누적합) 으로 순서를 고정합니다.
# - 사용 시 고려사항: χ⁺ 는 마지막 window 구간의 최댓값으로 상극한을 근사합니다.

import logging
import math

import numpy as np

from specto.bounds import BoundCertificate
from specto.cocycle import FixedPointTorusPoint, SymbolMatrix, TorusPoint, build_symbol, essential_symbol
from specto.errors import InputError
from specto.linalg import IntMatrix, MinimalSubspace
from specto.parallel import chunked_map, mean_and_std_error, sample_stream
from specto.settings.config import Settings
from specto.substitution import Substitution, substitution_matrix

from .fixed_point import check_precision, random_point, working_precision
from .schema import LyapunovEstimate

logger = logging.getLogger(__name__)

TINY = np.finfo(float).tiny


def _renormalize(products: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    norms = np.sqrt(np.sum(np.abs(products) ** 2, axis=(-2, -1)))
    if np.any(norms == 0.0):
        logger.warning("cocycle product vanished; flooring its norm")
        norms = np.maximum(norms, TINY)
    return products / norms[..., None, None], norms


def renormalized_product(
    sym: SymbolMatrix,
    E: IntMatrix,
    s: TorusPoint | FixedPointTorusPoint,
    n: int,
) -> tuple[np.ndarray, list[float]]:
    """
    M(Eⁿ⁻¹s)···M(s) 를 정규화된 행렬과 단계별 로그 배율로 나누어 계산합니다.

    Returns:
        tuple[np.ndarray, list[float]]: (Frobenius 노름 1 인 행렬, log 배율 목록). 원래 곱 = exp(Σ 배율)·행렬.
    """
    if E.dim != sym.num_vars or s.dim != sym.num_vars:
        raise InputError("dimension mismatch between symbol, matrix and point")
    product = np.eye(sym.dim, dtype=complex)
    scales: list[float] = []
    if isinstance(s, FixedPointTorusPoint):
        point = s
        for _ in range(n):
            product, norm = _renormalize(sym.evaluate_at(point.to_floats()) @ product)
            scales.append(math.log(norm))
            point = point.apply(E)
        return product, scales
    E_array = E.to_numpy()
    coords = np.array(s.coordinates, dtype=float)
    for _ in range(n):
        product, norm = _renormalize(sym.evaluate_at(coords) @ product)
        scales.append(math.log(norm))
        coords = np.mod(E_array @ coords, 1.0)
    return product, scales


def mc_exponent(
    zeta: Substitution,
    V: MinimalSubspace,
    n_steps: int,
    n_samples: int,
    seed: int | None = None,
    threads: int | None = None,
    precision_bits: int | None = None,
) -> LyapunovEstimate:
    """
    본질 코사이클의 Lyapunov 지수 χ 를 Monte Carlo 로 추정합니다.

    표본 s 는 (seed, 청크 번호) 스트림에서 뽑은 P비트 고정소수점 점이며 궤도는 B = V.restriction 으로 정확히 진행합니다.

    Args:
        zeta (Substitution): 치환.
        V (MinimalSubspace): 최소 부분공간. B는 가역이고 단위근 고유값이 없어야 합니다 (호출자가 확인).
        n_steps (int): 표본당 단계 수 (10 이상).
        n_samples (int): 표본 수 (2 이상).
        seed (int | None): 기본값은 Settings.SPECTO_SEED.
        threads (int | None): 작업 스레드 수. 결과에 영향을 주지 않습니다.
        precision_bits (int | None): 최소 정밀도.

    Returns:
        LyapunovEstimate: 표본 평균과 표준오차.
    """
    if n_steps < 10:
        raise InputError(f"n_steps must be at least 10, got {n_steps}")
    if n_samples < 2:
        raise InputError(f"n_samples must be at least 2, got {n_samples}")
    seed = Settings.SPECTO_SEED if seed is None else seed
    sym = essential_symbol(build_symbol(zeta), V)
    E = V.restriction
    bits = working_precision(E, n_steps, precision_bits)
    logger.info(f"Monte Carlo exponent: {n_samples} samples x {n_steps} steps at {bits} bits (rank {V.rank})")

    def run_chunk(index: int, start: int, stop: int) -> list[float]:
        rng = sample_stream(seed, index)
        points = [random_point(rng, sym.num_vars, bits) for _ in range(stop - start)]
        products = np.tile(np.eye(sym.dim, dtype=complex), (stop - start, 1, 1))
        logs = np.empty((n_steps, stop - start))
        for step in range(n_steps):
            coords = np.array([p.to_floats() for p in points])
            products, norms = _renormalize(sym.evaluate(coords) @ products)
            logs[step] = np.log(norms)
            points = [p.apply(E) for p in points]
        return [math.fsum(column) / n_steps for column in logs.T.tolist()]

    chunks = chunked_map(run_chunk, n_samples, Settings.SPECTO_MC_CHUNK, threads)
    value, std_error = mean_and_std_error([v for chunk in chunks for v in chunk])
    logger.info(f"chi estimate {value:.6f} +- {std_error:.2e}")
    return LyapunovEstimate(
        value=value,
        std_error=std_error,
        n_steps=n_steps,
        n_samples=n_samples,
        seed=seed,
        precision_bits=bits,
    )


def attach_bounds(estimate: LyapunovEstimate, bounds: list[BoundCertificate]) -> LyapunovEstimate:
    """상한 인증서를 붙이고, 추정값이 최소 상한 + 3·표준오차를 넘으면 표시합니다."""
    exceeds = bool(bounds) and estimate.value > min(b.bound for b in bounds) + 3 * estimate.std_error
    if exceeds:
        logger.warning(f"estimate {estimate.value} exceeds the smallest upper bound by more than 3 standard errors")
    return estimate.model_copy(update={"certified_upper_bounds": list(bounds), "exceeds_bound": exceeds})


def pointwise_upper_exponent(zeta: Substitution, w: FixedPointTorusPoint, N: int, window: float = 0.25) -> float:
    """
    χ⁺(w) = limsup (1/n)·log‖M_ζ(w, n)‖ 를 마지막 window·N 단계의 최댓값으로 근사합니다.

    궤도는 E = S_ζᵗ 로 정확히 진행합니다.

    Raises:
        PrecisionError: w 의 정밀도가 N·⌈log₂‖S_ζᵗ‖∞⌉ + 64 비트보다 작은 경우.
    """
    if N < 4:
        raise InputError(f"N must be at least 4, got {N}")
    if not 0.0 < window <= 1.0:
        raise InputError(f"window must lie in (0, 1], got {window}")
    sym = build_symbol(zeta)
    E = substitution_matrix(zeta).transpose()
    if w.dim != zeta.alphabet_size:
        raise InputError(f"point has {w.dim} coordinates, alphabet has {zeta.alphabet_size} letters")
    check_precision(E, w, N)
    _, scales = renormalized_product(sym, E, w, N)
    tail_start = max(1, N - math.ceil(window * N) + 1)
    best = -math.inf
    total, compensation = 0.0, 0.0
    for n, scale in enumerate(scales, start=1):
        # Neumaier 보정 합
        t = total + scale
        if abs(total) >= abs(scale):
            compensation += (total - t) + scale
        else:
            compensation += (scale - t) + total
        total = t
        if n >= tail_start:
            best = max(best, (total + compensation) / n)
    logger.debug(f"pointwise upper exponent over steps {tail_start}..{N}: {best}")
    return best
