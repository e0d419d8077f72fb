from dataclasses import dataclass, field

from pydantic import Field, model_validator

from specto.bounds import BoundCertificate, BoundMethod, ClearingFactor, LaurentPoly
from specto.equidist import Witness
from specto.linalg import IntPoly, MinimalSubspace
from specto.lyapunov import LyapunovEstimate
from specto.polyalg import RootBox
from specto.serialization import Rational, ReportModel
from specto.settings.config import Settings
from specto.substitution import Aperiodicity, FamilyParams

from .const import ActionKind, Decision


class ConditionRecord(ReportModel):
    """판정 과정에서 확인한 조건 하나입니다."""

    name: str
    passed: bool
    detail: str = ""
    witness: Witness | None = None


class ChiBound(ReportModel):
    value: float
    method: BoundMethod
    certificate: BoundCertificate


class SingularityCertificate(ReportModel):
    """
    치환 작용의 순수 특이 스펙트럼 판정서입니다.

    SINGULAR_CERTIFIED 는 엄밀한 상한 (jensen, cleared) 의 정수 상수항 C_k 와 θ₁ 의 유리수 하한에 대해
    C_k < theta1_lower^k 가 정확히 성립할 때만 부여합니다.
    """

    action: ActionKind
    substitution: dict
    conditions: list[ConditionRecord] = Field(default_factory=list)
    chi_bound: ChiBound | None = None
    supplementary_bounds: list[BoundCertificate] = Field(default_factory=list)
    theta1_lower: Rational | None = None
    theta1_upper: Rational | None = None
    cw_rounds: int = 0
    decision: Decision
    power_used: int = 1
    remark_b_applied: bool = False
    aperiodicity: Aperiodicity = Aperiodicity.UNKNOWN
    lyapunov_estimate: LyapunovEstimate | None = None
    subspace: dict | None = None
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_decision(self) -> "SingularityCertificate":
        if self.decision == Decision.SINGULAR_CERTIFIED:
            bound = self.chi_bound
            if bound is None or not bound.method.rigorous or self.theta1_lower is None:
                raise ValueError("certified decisions need a rigorous bound and a theta_1 lower bound")
            if not bound.certificate.constant_term < self.theta1_lower**bound.certificate.k:
                raise ValueError("certified decisions need constant_term < theta1_lower^k")
        if self.decision == Decision.CONDITIONS_FAIL and all(c.passed for c in self.conditions):
            raise ValueError("CONDITIONS_FAIL must list the failed condition")
        return self


@dataclass(frozen=True)
class PFKernel:
    """ker p_θ₁(S_ζᵗ) 와 PF 고유벡터의 성분별 포함 구간입니다."""

    p_theta1: IntPoly
    subspace: MinimalSubspace
    pf_vector_box: tuple[RootBox, ...]

    def to_json(self) -> dict:
        return {
            "p_theta1": self.p_theta1.to_json(),
            "subspace": self.subspace.to_json(),
            "pf_vector_box": [box.to_json() for box in self.pf_vector_box],
        }


@dataclass
class AnalysisOptions:
    """
    판정 파이프라인 옵션입니다.

    numerical 이 참일 때만 Monte Carlo 상한으로 SINGULAR_NUMERICAL 판정을 시도하고,
    precision_bits 정밀도의 고정소수점 궤도로 χ 추정값 (lyapunov_steps × lyapunov_samples) 을 함께 기록합니다.
    majorant 는 (Laurent 다항식, clearing factor 목록) 이며 격자 검사를 거친 보조 상한으로 기록됩니다.
    """

    k_max: int = 1
    samples: int = 2000
    iters: int = field(default_factory=lambda: Settings.SPECTO_CW_ROUNDS)
    seed: int = field(default_factory=lambda: Settings.SPECTO_SEED)
    numerical: bool = False
    precision_bits: int | None = None
    lyapunov_steps: int = 100
    lyapunov_samples: int = 64
    majorant: tuple[LaurentPoly, list[ClearingFactor]] | None = None
    family: FamilyParams | None = None
    threads: int | None = None
