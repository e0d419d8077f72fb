from enum import Enum


class FamilyTag(str, Enum):
    """내장 치환 족 이름입니다."""

    ZETA_M = "zeta_m"
    SIGMA_M = "sigma_m"
    ZETA_MAB = "zeta_mAB"


class Aperiodicity(str, Enum):
    """비주기성 판정 결과입니다. 충분조건만 구현하므로 UNKNOWN은 주기적이라는 뜻이 아닙니다."""

    APERIODIC = "Aperiodic"
    UNKNOWN = "Unknown"
