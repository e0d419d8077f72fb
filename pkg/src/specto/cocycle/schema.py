from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from specto.errors import InputError
from specto.linalg import IntMatrix

Frequency = tuple[int, ...]


@dataclass(frozen=True)
class SymbolMatrix:
    """
    M_ζ 를 정확히 표현하는 d×d 행렬입니다.

    entries[(b, c)] 는 (진동수 벡터, 중복도) 쌍의 튜플이며, 성분 값은 Σ mult·e(⟨f, ξ⟩),
    e(x) = exp(−2πi x) 입니다. 0인 성분은 저장하지 않습니다.
    """

    dim: int
    num_vars: int
    entries: Mapping[tuple[int, int], tuple[tuple[Frequency, int], ...]]

    def entry(self, b: int, c: int) -> tuple[tuple[Frequency, int], ...]:
        return self.entries.get((b, c), ())

    def occupancy(self, b: int, c: int) -> int:
        return sum(mult for _, mult in self.entry(b, c))

    @cached_property
    def _terms(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        freqs, weights, slots = [], [], []
        for (b, c), terms in sorted(self.entries.items()):
            for freq, mult in terms:
                freqs.append(freq)
                weights.append(mult)
                slots.append(b * self.dim + c)
        onehot = np.zeros((len(slots), self.dim * self.dim))
        onehot[np.arange(len(slots)), slots] = 1.0
        freq_array = np.array(freqs, dtype=float).reshape(len(freqs), self.num_vars)
        return freq_array, np.array(weights, dtype=float), onehot

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """
        점 배열 (N, r) 에서 행렬 값을 한 번에 계산합니다.

        Returns:
            np.ndarray: (N, d, d) 복소 배열.
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.shape[1] != self.num_vars:
            raise InputError(f"symbol has {self.num_vars} variables, points have {points.shape[1]} coordinates")
        freqs, weights, onehot = self._terms
        phases = np.mod(points @ freqs.T, 1.0)
        values = weights * np.exp(-2j * np.pi * phases)
        return (values @ onehot).reshape(len(points), self.dim, self.dim)

    def evaluate_at(self, point: Sequence[float]) -> np.ndarray:
        return self.evaluate(np.asarray([point], dtype=float))[0]

    def frobenius_squared(self, points: np.ndarray) -> np.ndarray:
        values = self.evaluate(points)
        return np.sum(np.abs(values) ** 2, axis=(1, 2))

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "num_vars": self.num_vars,
            "entries": [
                {"row": b, "col": c, "terms": [{"freq": list(freq), "mult": mult} for freq, mult in terms]}
                for (b, c), terms in sorted(self.entries.items())
            ],
        }


@dataclass(frozen=True)
class TorusPoint:
    """배정밀도 좌표로 표현한 T^r 의 점입니다."""

    coordinates: tuple[float, ...]

    @classmethod
    def of(cls, values: Iterable[float]) -> "TorusPoint":
        return cls(tuple(float(v) % 1.0 for v in values))

    @property
    def dim(self) -> int:
        return len(self.coordinates)


@dataclass(frozen=True)
class FixedPointTorusPoint:
    """P비트 고정소수점 좌표 (값 = 정수 / 2^P) 로 표현한 T^r 의 점입니다."""

    precision_bits: int
    coordinates: tuple[int, ...]

    def __post_init__(self):
        if self.precision_bits < 1:
            raise InputError("precision must be at least one bit")
        limit = 1 << self.precision_bits
        if any(c < 0 or c >= limit for c in self.coordinates):
            raise InputError("fixed-point coordinates must lie in [0, 2^P)")

    @classmethod
    def from_fractions(cls, values: Iterable[Fraction | int | str], precision_bits: int) -> "FixedPointTorusPoint":
        mask = (1 << precision_bits) - 1
        coords = []
        for v in values:
            v = Fraction(v)
            coords.append((v.numerator << precision_bits) // v.denominator & mask)
        return cls(precision_bits, tuple(coords))

    @classmethod
    def zero(cls, dim: int, precision_bits: int) -> "FixedPointTorusPoint":
        return cls(precision_bits, (0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.coordinates)

    def apply(self, E: IntMatrix) -> "FixedPointTorusPoint":
        """x ↦ E·x mod 1 을 정확히 계산합니다."""
        mask = (1 << self.precision_bits) - 1
        return FixedPointTorusPoint(self.precision_bits, tuple(v & mask for v in E.apply(self.coordinates)))

    def to_floats(self) -> tuple[float, ...]:
        shift = self.precision_bits - 53
        if shift > 0:
            return tuple((c >> shift) * 2.0**-53 for c in self.coordinates)
        return tuple(c * 2.0**-self.precision_bits for c in self.coordinates)

    def to_torus_point(self) -> TorusPoint:
        return TorusPoint(self.to_floats())
