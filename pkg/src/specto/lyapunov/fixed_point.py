"""고정소수점 궤도 x ↦ E·x mod 1 의 정밀도 정책입니다."""

import logging

import numpy as np

from specto.cocycle import FixedPointTorusPoint
from specto.errors import PrecisionError
from specto.linalg import IntMatrix
from specto.parallel import random_bits
from specto.settings.config import Settings

logger = logging.getLogger(__name__)

GUARD_BITS = 64


def bits_per_step(E: IntMatrix) -> int:
    """한 번의 E 적용에서 잃는 비트 수 ⌈log₂‖E‖∞⌉ 입니다 (‖E‖∞ ≤ 1 이면 0)."""
    norm = E.row_sum_norm()
    return (norm - 1).bit_length() if norm > 1 else 0


def required_precision_bits(E: IntMatrix, n_steps: int) -> int:
    """
    N 단계 궤도에 필요한 비트 수 N·⌈log₂‖E‖∞⌉ + 64 입니다.

    한 단계의 오차 증폭은 행 합 노름 ‖E‖∞ 로 누를 수 있습니다. ‖E‖∞ ≤ d·max|E_ij| 이므로 이 값은
    성분 최댓값으로 쓴 N·⌈log₂(d²·max|E_ij|)⌉ + 64 를 넘지 않습니다.
    """
    return n_steps * bits_per_step(E) + GUARD_BITS


def working_precision(E: IntMatrix, n_steps: int, precision_bits: int | None = None) -> int:
    """요청값, 설정 최솟값, 필요 비트 수 중 가장 큰 값을 사용합니다."""
    return max(precision_bits or 0, Settings.SPECTO_PRECISION_BITS, required_precision_bits(E, n_steps))


def check_precision(E: IntMatrix, point: FixedPointTorusPoint, n_steps: int) -> None:
    """
    point 의 정밀도로 n_steps 단계를 정확히 진행할 수 있는지 확인합니다.

    Raises:
        PrecisionError: 정밀도가 부족한 경우. 필요한 비트 수를 포함합니다.
    """
    required = required_precision_bits(E, n_steps)
    if point.precision_bits < required:
        logger.error(f"orbit of {n_steps} steps needs {required} bits, point has {point.precision_bits}")
        raise PrecisionError(
            f"fixed-point precision {point.precision_bits} is below the required {required} bits for {n_steps} steps",
            required_bits=required,
        )


def random_point(rng: np.random.Generator, dim: int, precision_bits: int) -> FixedPointTorusPoint:
    """[0,1)^dim 의 균일한 P비트 고정소수점 점을 뽑습니다."""
    return FixedPointTorusPoint(precision_bits, tuple(random_bits(rng, precision_bits) for _ in range(dim)))
