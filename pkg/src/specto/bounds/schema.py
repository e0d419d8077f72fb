from pydantic import Field

from specto.serialization import BigInt, ReportModel

from .const import BoundMethod


class BoundCertificate(ReportModel):
    """χ 상한 하나와 그 근거입니다. bound = (1/2k)·log(constant_term)."""

    bound: float
    constant_term: BigInt | None = None
    k: int = 1
    method: BoundMethod
    rigorous: bool
    clearings: list[dict] = Field(default_factory=list)
    std_error: float | None = None
    seed: int | None = None
    samples: int | None = None
    grid_points: int | None = None
