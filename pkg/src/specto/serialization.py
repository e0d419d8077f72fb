"""보고서 JSON에서 무한 정밀도 정수와 유리수를 10진 문자열로 주고받기 위한 타입 정의입니다."""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise ValueError("floats are not accepted as exact rationals")
    return Fraction(value)


def _to_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError("booleans are not integers here")
    if isinstance(value, str):
        return int(value.strip())
    return value


BigInt = Annotated[
    int,
    BeforeValidator(_to_int),
    PlainSerializer(lambda v: str(v), return_type=str, when_used="json"),
]

Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(lambda v: str(v), return_type=str, when_used="json"),
]


class ReportModel(BaseModel):
    """보고서에 포함되는 모든 모델의 공통 설정입니다."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)
