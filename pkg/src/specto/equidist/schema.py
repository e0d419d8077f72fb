from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from pydantic import Field, model_validator

from specto.errors import InputError
from specto.linalg import IntMatrix, RatVector, char_poly
from specto.serialization import BigInt, ReportModel

from .const import FailedCondition


class Witness(ReportModel):
    """균등분포 실패를 보여주는 정수 벡터 h 와 위수 k 입니다."""

    h: list[BigInt]
    k: int


class UDVerdict(ReportModel):
    """(Aⁿωv) mod 1 이 거의 모든 ω 에 대해 균등분포하는지에 대한 판정입니다."""

    holds: bool
    failed_condition: FailedCondition = FailedCondition.NONE
    witness: Witness | None = None
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_consistency(self) -> "UDVerdict":
        if self.holds != (self.failed_condition == FailedCondition.NONE):
            raise ValueError("holds must be true exactly when no condition failed")
        needs_witness = self.failed_condition in (FailedCondition.DEGENERATE, FailedCondition.UNIT_ROOT_EIGENVALUE)
        if needs_witness and self.witness is None:
            raise ValueError(f"{self.failed_condition.value} verdicts carry a witness")
        return self


class OmegaSample(ReportModel):
    omega: float
    max_weyl_sum: float
    argmax: list[int]
    passed: bool


class EmpiricalUD(ReportModel):
    """여러 ω 에 대한 Weyl 합 실험 결과입니다."""

    n_steps: int
    h_max: int
    tolerance: float
    precision_bits: int
    seed: int
    step: int = 1
    offset: int = 0
    samples: list[OmegaSample]
    passed: int
    majority_holds: bool


@dataclass(frozen=True)
class RecurrenceSeq:
    """
    uₙ = Σ αᵢ·u_{n−d+i} 를 만족하는 선형 점화 수열입니다.

    relation 은 α₀, …, α_{d−1} (α₀ ≠ 0), initial 은 u₀, …, u_{d−1} 입니다.
    """

    relation: tuple[int, ...]
    initial: tuple[int | Fraction, ...]

    def __post_init__(self):
        if not self.relation or self.relation[0] == 0:
            raise InputError("recurrence needs a non-zero coefficient alpha_0")
        if len(self.initial) != len(self.relation):
            raise InputError(f"recurrence of order {len(self.relation)} needs as many initial values, got {len(self.initial)}")

    @classmethod
    def from_functional(cls, A: IntMatrix, v: RatVector, h: Sequence[int]) -> "RecurrenceSeq":
        """⟨Aⁿv, h⟩ 를 A 의 특성다항식에서 읽은 점화식과 함께 만듭니다."""
        p = char_poly(A)
        d = A.dim
        relation = tuple(-c for c in p.coefficients[:d])
        initial = []
        current = v.entries
        for _ in range(d):
            initial.append(sum(Fraction(a) * b for a, b in zip(current, h, strict=True)))
            current = A.apply(current)
        initial = [int(u) if u.denominator == 1 else u for u in initial]
        return cls(relation, tuple(initial))

    @property
    def order(self) -> int:
        return len(self.relation)

    def terms(self, n: int) -> list[int | Fraction]:
        """처음 n 개 항을 정확히 생성합니다."""
        values = list(self.initial[:n])
        d = self.order
        while len(values) < n:
            window = values[-d:]
            values.append(sum(a * u for a, u in zip(self.relation, window, strict=True)))
        return values
