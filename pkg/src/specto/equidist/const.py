from enum import Enum


class FailedCondition(str, Enum):
    """균등분포 정리의 조건 중 처음으로 실패한 항목입니다."""

    NONE = "none"
    SINGULAR = "singular"
    DEPENDENT_ITERATES = "dependent_iterates"
    DEGENERATE = "degenerate"
    UNIT_ROOT_EIGENVALUE = "unit_root_eigenvalue"


VERIFY_TERMS = 50
MIN_OMEGA_DENOMINATOR_BITS = 64
WEYL_TOLERANCE = 0.05
WEYL_BLOCK = 1 << 20
MULTIPLICITY_MAX_TERMS = 100_000
