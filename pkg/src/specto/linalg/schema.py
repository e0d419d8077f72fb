from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

import numpy as np
import sympy

from specto.errors import InputError

X = sympy.Symbol("x")


@dataclass(frozen=True)
class IntMatrix:
    """무한 정밀도 정수 성분을 갖는 정사각 행렬입니다. 성분은 절대 반올림되지 않습니다."""

    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        """
        중첩 시퀀스로부터 정사각 정수 행렬을 생성합니다.

        Args:
            rows (Iterable[Iterable[int]]): 행 단위 성분. 10진 문자열도 허용합니다.

        Returns:
            IntMatrix: 검증된 행렬.
        """
        parsed = tuple(tuple(_as_int(e) for e in row) for row in rows)
        if not parsed:
            raise InputError("matrix must have at least one row")
        dim = len(parsed)
        if any(len(row) != dim for row in parsed):
            raise InputError(f"matrix must be square, got {dim} rows of lengths {[len(r) for r in parsed]}")
        return cls(parsed)

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @classmethod
    def zeros(cls, dim: int) -> "IntMatrix":
        return cls(tuple((0,) * dim for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        cols = list(zip(*other.entries, strict=True))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col, strict=True)) for col in cols) for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r1, r2, strict=True)) for r1, r2 in zip(self.entries, other.entries, strict=True))
        )

    def scale(self, factor: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(factor * a for a in row) for row in self.entries))

    def apply(self, vector: Sequence[int | Fraction]) -> tuple:
        """행렬-벡터 곱을 정확하게 계산합니다."""
        return tuple(sum(a * x for a, x in zip(row, vector, strict=True)) for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries, strict=True)))

    def power(self, n: int) -> "IntMatrix":
        if n < 0:
            raise InputError(f"matrix power must be non-negative, got {n}")
        result = IntMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dim))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for row in self.entries for a in row)

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def row_sum_norm(self) -> int:
        """행 절댓값 합의 최댓값 (‖·‖∞) 입니다."""
        return max(sum(abs(a) for a in row) for row in self.entries)

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.entries, dtype=dtype)

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.entries]


@dataclass(frozen=True)
class RatVector:
    """기약분수 성분을 갖는 유리수 벡터입니다."""

    entries: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[int | str | Fraction]) -> "RatVector":
        parsed = tuple(Fraction(v) if not isinstance(v, float) else _reject_float(v) for v in values)
        if not parsed:
            raise InputError("vector must be non-empty")
        return cls(parsed)

    @classmethod
    def ones(cls, dim: int) -> "RatVector":
        return cls((Fraction(1),) * dim)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_positive(self) -> bool:
        return all(e > 0 for e in self.entries)

    def integer_scaled(self) -> tuple[int, ...]:
        """공통 분모를 곱해 얻은 정수 벡터를 반환합니다."""
        denominator = lcm(*(e.denominator for e in self.entries))
        return tuple(int(e * denominator) for e in self.entries)

    def to_json(self) -> list[str]:
        return [str(e) for e in self.entries]


@dataclass(frozen=True)
class MinimalSubspace:
    """
    최소 부분공간 V의 격자 기저와 제한 행렬 B입니다.

    lattice_basis의 각 원소는 Z^d의 열벡터이며, A·G = G·B (G: 기저 행렬)가 정확히 성립합니다.
    """

    ambient_dim: int
    rank: int
    lattice_basis: tuple[tuple[int, ...], ...]
    restriction: IntMatrix

    @cached_property
    def basis_rows(self) -> tuple[tuple[int, ...], ...]:
        """d×r 기저 행렬 G를 행 단위로 반환합니다."""
        return tuple(zip(*self.lattice_basis, strict=True))

    def embed(self, coordinates: Sequence[int | Fraction]) -> tuple:
        """격자 좌표 s를 주변 공간 벡터 G·s로 변환합니다."""
        return tuple(sum(g * s for g, s in zip(row, coordinates, strict=True)) for row in self.basis_rows)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "lattice_basis": [[str(a) for a in col] for col in self.lattice_basis],
            "restriction": self.restriction.to_json(),
        }


@dataclass(frozen=True)
class IntPoly:
    """상수항부터 나열된 정수 계수 다항식입니다. 최고차 계수는 0이 아닙니다."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "IntPoly":
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def poly(self) -> sympy.Poly:
        if self.is_zero():
            return sympy.Poly(0, X, domain=sympy.ZZ)
        return sympy.Poly(list(reversed(self.coefficients)), X, domain=sympy.ZZ)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        return str(self.poly.as_expr())


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise InputError("booleans are not matrix entries")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError as e:
            raise InputError(f"not an integer: {value!r}") from e
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    if isinstance(value, np.integer):
        return int(value)
    raise InputError(f"not an integer: {value!r}")


def _reject_float(value: float) -> Fraction:
    raise InputError(f"floats are not exact rationals: {value!r}; pass a string such as '1/3'")
