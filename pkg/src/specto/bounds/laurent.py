from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from specto.errors import InputError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPoly:
    """
    무한 정밀도 정수 계수를 갖는 희소 다변수 Laurent 다항식입니다.

    z_j = e(s_j) = exp(−2πi s_j) 로 두면 terms[e] 는 z^e 의 계수입니다. 0 계수는 저장하지 않습니다.
    """

    num_vars: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for exponent, coeff in self.terms.items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != self.num_vars:
                raise InputError(f"exponent {exponent} does not have {self.num_vars} coordinates")
            if coeff:
                cleaned[exponent] = cleaned.get(exponent, 0) + int(coeff)
        object.__setattr__(self, "terms", {e: c for e, c in cleaned.items() if c})

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def monomial(cls, exponent: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coeff})

    @classmethod
    def from_terms(cls, num_vars: int, terms: Iterable[tuple[Exponent, int]]) -> "LaurentPoly":
        collected: dict[Exponent, int] = {}
        for exponent, coeff in terms:
            collected[exponent] = collected.get(exponent, 0) + coeff
        return cls(num_vars, collected)

    def _check(self, other: "LaurentPoly") -> None:
        if other.num_vars != self.num_vars:
            raise InputError(f"Laurent polynomials in {self.num_vars} and {other.num_vars} variables")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        result = dict(self.terms)
        for e, c in other.terms.items():
            result[e] = result.get(e, 0) + c
        return LaurentPoly(self.num_vars, result)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        result: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2, strict=True))
                result[e] = result.get(e, 0) + c1 * c2
        return LaurentPoly(self.num_vars, result)

    def scale(self, factor: int) -> "LaurentPoly":
        return LaurentPoly(self.num_vars, {e: factor * c for e, c in self.terms.items()})

    def conjugate(self) -> "LaurentPoly":
        """|z_j| = 1 위에서의 켤레 (정수 계수이므로 지수 부호만 바뀜) 입니다."""
        return LaurentPoly(self.num_vars, {tuple(-a for a in e): c for e, c in self.terms.items()})

    def squared_modulus(self) -> "LaurentPoly":
        return self * self.conjugate()

    def l2_squared(self) -> int:
        """계수 제곱합, 즉 |P|² 의 상수항 (Parseval) 입니다."""
        return sum(c * c for c in self.terms.values())

    @property
    def constant_term(self) -> int:
        return self.terms.get((0,) * self.num_vars, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_conjugate_symmetric(self) -> bool:
        return all(self.terms.get(tuple(-a for a in e), 0) == c for e, c in self.terms.items())

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """점 배열 (N, r) 에서 값을 계산합니다."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if not self.terms:
            return np.zeros(len(points), dtype=complex)
        exponents = np.array(list(self.terms.keys()), dtype=float)
        coeffs = np.array([float(c) for c in self.terms.values()])
        phases = np.mod(points @ exponents.T, 1.0)
        return np.exp(-2j * np.pi * phases) @ coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())]


@dataclass(frozen=True)
class ClearingFactor:
    """
    |w^a − 1|² 를 나타냅니다. w는 Z^r 의 원시 방향 (첫 번째 0이 아닌 성분이 양수), a ≥ 1 은 위수입니다.
    """

    monomial: Exponent
    order: int

    @classmethod
    def from_step(cls, step: Iterable[int]) -> "ClearingFactor":
        """등차 진동수 열의 공차로부터 원시 방향과 위수를 구합니다."""
        step = tuple(int(s) for s in step)
        a = gcd(*step)
        if a == 0:
            raise InputError("a geometric run needs a non-zero step")
        direction = tuple(s // a for s in step)
        if next(s for s in direction if s != 0) < 0:
            direction = tuple(-s for s in direction)
        return cls(direction, a)

    @property
    def exponent(self) -> Exponent:
        return tuple(self.order * w for w in self.monomial)

    def numerator(self) -> LaurentPoly:
        """w^a − 1 입니다."""
        r = len(self.monomial)
        return LaurentPoly(r, {self.exponent: 1, (0,) * r: -1})

    def polynomial(self) -> LaurentPoly:
        """|w^a − 1|² = 2 − w^a − w^{−a} 입니다."""
        return self.numerator().squared_modulus()

    def to_json(self) -> dict:
        return {"monomial": list(self.monomial), "order": self.order}
