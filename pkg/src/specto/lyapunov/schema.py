from pydantic import Field

from specto.bounds import BoundCertificate
from specto.cocycle import FixedPointTorusPoint
from specto.serialization import ReportModel

__all__ = ["FixedPointTorusPoint", "LyapunovEstimate"]


class LyapunovEstimate(ReportModel):
    """본질 Lyapunov 지수 χ 의 Monte Carlo 추정값입니다."""

    value: float
    std_error: float = Field(ge=0.0)
    n_steps: int
    n_samples: int
    seed: int
    precision_bits: int
    certified_upper_bounds: list[BoundCertificate] = Field(default_factory=list)
    exceeds_bound: bool = False
