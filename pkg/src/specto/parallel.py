# 설계 방향 및 원칙:
# - 핵심 책임: 고정 크기 청크 단위 병렬 실행과 (seed, 청크 번호) 로 결정되는 난수 스트림을 제공합니다.
# - 설계 원칙: 결과는 항상 청크 순서대로 반환되므로 스레드 수가 수치 결과를 바꾸지 않습니다.
# - 기술적 고려사항: numpy의 카운터 기반 생성기 Philox를 SeedSequence(seed, spawn_key=(index,)) 로 초기화합니다.

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np

from specto.settings.startup import resolve_threads

logger = logging.getLogger(__name__)

T = TypeVar("T")


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """
    (seed, index) 로 완전히 결정되는 독립 난수 생성기를 반환합니다.

    Args:
        seed (int): 전역 seed.
        index (int): 청크 또는 표본 번호.

    Returns:
        np.random.Generator: Philox 기반 생성기.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def random_bits(rng: np.random.Generator, bits: int) -> int:
    """생성기에서 [0, 2^bits) 범위의 균일한 정수를 뽑습니다."""
    n_bytes = (bits + 7) // 8
    value = int.from_bytes(rng.bytes(n_bytes), "little")
    return value >> (8 * n_bytes - bits)


def chunk_bounds(n_items: int, chunk_size: int) -> list[tuple[int, int]]:
    return [(start, min(start + chunk_size, n_items)) for start in range(0, n_items, chunk_size)]


def chunked_map(fn: Callable[[int, int, int], T], n_items: int, chunk_size: int, threads: int | None = None) -> list[T]:
    """
    [0, n_items) 를 고정 크기 청크로 나누어 fn(chunk_index, start, stop) 을 병렬 실행합니다.

    Returns:
        list[T]: 청크 순서대로 정렬된 결과.
    """
    bounds = chunk_bounds(n_items, chunk_size)
    workers = min(resolve_threads(threads), max(1, len(bounds)))
    logger.debug(f"running {len(bounds)} chunks on {workers} threads")
    if workers == 1:
        return [fn(i, start, stop) for i, (start, stop) in enumerate(bounds)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda item: fn(item[0], *item[1]), enumerate(bounds)))


def mean_and_std_error(values: Sequence[float]) -> tuple[float, float]:
    """순서가 고정된 값들의 평균과 표준오차를 보정 합산(math.fsum)으로 구합니다."""
    n = len(values)
    mean = math.fsum(values) / n
    if n < 2:
        return mean, 0.0
    variance = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
    return mean, math.sqrt(variance / n)
