from enum import Enum


class Decision(str, Enum):
    """특이 스펙트럼 판정 결과입니다. SINGULAR_CERTIFIED 만 증명에 해당합니다."""

    SINGULAR_CERTIFIED = "SINGULAR_CERTIFIED"
    SINGULAR_NUMERICAL = "SINGULAR_NUMERICAL"
    INCONCLUSIVE = "INCONCLUSIVE"
    CONDITIONS_FAIL = "CONDITIONS_FAIL"


class ActionKind(str, Enum):
    Z = "Z"
    R_SELFSIMILAR = "R_selfsimilar"
    R_VECTOR = "R_vector"


PF_MAX_ITERATIONS = 10_000
