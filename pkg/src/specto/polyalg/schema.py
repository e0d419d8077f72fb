from dataclasses import dataclass
from fractions import Fraction

import mpmath

from specto.linalg.schema import IntPoly


@dataclass(frozen=True)
class RootBox:
    """
    다항식의 근 하나만을 포함함이 확인된 원판입니다.

    center_re, center_im은 확장 정밀도 값이며, 유리근은 exact에 정확한 값을 두고 radius = 0 입니다.
    """

    center_re: mpmath.mpf
    center_im: mpmath.mpf
    radius: mpmath.mpf
    exact: Fraction | None = None
    is_perron: bool = False

    @property
    def center(self) -> complex:
        return complex(float(self.center_re), float(self.center_im))

    @property
    def is_real(self) -> bool:
        return self.center_im == 0

    def contains(self, value: complex, slack: float = 0.0) -> bool:
        return abs(complex(value) - self.center) <= float(self.radius) + slack

    def to_json(self) -> dict:
        return {
            "center_re": mpmath.nstr(self.center_re, 30),
            "center_im": mpmath.nstr(self.center_im, 30),
            "radius": mpmath.nstr(self.radius, 5),
            "exact": None if self.exact is None else str(self.exact),
            "is_perron": self.is_perron,
        }


__all__ = ["IntPoly", "RootBox"]
