from enum import Enum


class BoundMethod(str, Enum):
    """χ 상한을 얻은 방법입니다. JENSEN, CLEARED만 엄밀한 상한입니다."""

    JENSEN = "jensen"
    CLEARED = "cleared"
    MAJORANT_GRID = "majorant-grid"
    MONTE_CARLO = "monte-carlo"

    @property
    def rigorous(self) -> bool:
        return self in (BoundMethod.JENSEN, BoundMethod.CLEARED)


GRID_SLACK = 1e-9
