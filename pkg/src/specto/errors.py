"""specto 전역에서 사용하는 예외 계층입니다."""


class SpectoError(Exception):
    """specto 예외의 최상위 클래스입니다."""


class InputError(SpectoError, ValueError):
    """입력값이 형식에 맞지 않거나 전제 조건을 위반한 경우 발생합니다. (CLI 종료 코드 2)"""


class InvariantError(SpectoError, RuntimeError):
    """내부 불변식이 깨진 경우 발생합니다. (CLI 종료 코드 3)"""


class PrecisionError(InputError):
    """고정소수점 정밀도가 부족하거나 근 분리가 수렴하지 않은 경우 발생합니다."""

    def __init__(self, message: str, required_bits: int | None = None, achieved_radius: float | None = None):
        super().__init__(message)
        self.required_bits = required_bits
        self.achieved_radius = achieved_radius


class ClearingError(InputError):
    """잘못된 clearing factor가 주어진 경우 발생합니다."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class GridViolationError(InputError):
    """majorant 격자 검사에서 Gram 다항식이 majorant를 넘는 점이 발견된 경우 발생합니다."""

    def __init__(self, message: str, point: tuple[float, ...], excess: float):
        super().__init__(message)
        self.point = point
        self.excess = excess
