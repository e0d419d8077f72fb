import pytest

from specto.linalg import IntMatrix
from specto.substitution import FamilyParams, FamilyTag, Substitution, make_family


def _companion(coefficients: list[int]) -> IntMatrix:
    """monic 다항식 (상수항부터, 최고차 계수 제외) 의 동반 행렬입니다. 첫 표준 기저 벡터가 순환 벡터입니다."""
    d = len(coefficients)
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i, c in enumerate(coefficients):
        rows[i][d - 1] = -c
    return IntMatrix.of(rows)


@pytest.fixture
def companion():
    return _companion


@pytest.fixture
def fibonacci() -> Substitution:
    return Substitution.of(2, ["01", "0"])


@pytest.fixture
def thue_morse() -> Substitution:
    return Substitution.of(2, ["01", "10"])


@pytest.fixture
def constant_gram() -> Substitution:
    """0 ↦ 01, 1 ↦ 01. 본질 Gram 다항식이 상수 4 입니다."""
    return Substitution.of(2, ["01", "01"])


@pytest.fixture
def zeta_3() -> Substitution:
    return make_family(FamilyParams(FamilyTag.ZETA_M, 3))


@pytest.fixture
def zeta_20() -> Substitution:
    return make_family(FamilyParams(FamilyTag.ZETA_M, 20))


@pytest.fixture
def sigma_8() -> Substitution:
    return make_family(FamilyParams(FamilyTag.SIGMA_M, 8))


@pytest.fixture
def family3_params() -> FamilyParams:
    return FamilyParams(FamilyTag.ZETA_MAB, 30, "0" * 29 + "1", "1" * 30)
