# 설계 방향 및 원칙:
# - 핵심 책임: 치환의 조합론 (치환 행렬, 거듭제곱, 원시성/비주기성 관문, 내장 치환 족 생성)을 담당합니다.
# - 설계 원칙: 치환은 불변 값이며, 거듭제곱은 단어 길이 상한(SPECTO_WORD_CAP)으로 폭주를 막습니다.
# - 사용 시 고려사항: 비주기성은 θ₁의 무리성이라는 충분조건만 판정하며, 판정하지 못하면 UNKNOWN을 반환합니다.

import logging
from itertools import chain

from specto.errors import InputError
from specto.linalg import IntMatrix, IntPoly, char_poly, is_primitive
from specto.polyalg import minimal_poly_of_root, roots_numeric
from specto.settings.config import Settings

from .const import Aperiodicity, FamilyTag
from .schema import FamilyParams, Substitution

logger = logging.getLogger(__name__)


def substitution_matrix(zeta: Substitution) -> IntMatrix:
    """
    치환 행렬 S_ζ 를 구합니다. (i, j) 성분은 ζ(j)에 나타나는 문자 i의 개수입니다.
    """
    d = zeta.alphabet_size
    return IntMatrix(tuple(tuple(zeta.rules[j].count(i) for j in range(d)) for i in range(d)))


def power(zeta: Substitution, n: int, word_cap: int | None = None) -> Substitution:
    """
    ζ를 n번 합성한 치환 ζⁿ 을 구합니다.

    Args:
        zeta (Substitution): 치환.
        n (int): 1 이상의 지수.
        word_cap (int | None): 허용하는 최대 단어 길이. 기본값은 SPECTO_WORD_CAP.

    Returns:
        Substitution: ζⁿ.
    """
    if n < 1:
        raise InputError(f"substitution power must be at least 1, got {n}")
    cap = word_cap or Settings.SPECTO_WORD_CAP
    S_n = substitution_matrix(zeta).power(n)
    longest = max(sum(S_n.entries[i][j] for i in range(zeta.alphabet_size)) for j in range(zeta.alphabet_size))
    if longest > cap:
        logger.error(f"power {n} of {zeta} would produce words of length {longest}")
        raise InputError(f"word length {longest} of the {n}-th power exceeds the cap {cap}")
    rules = zeta.rules
    for _ in range(n - 1):
        rules = tuple(tuple(chain.from_iterable(zeta.rules[letter] for letter in rule)) for rule in rules)
    return Substitution(zeta.alphabet_size, rules)


def check_primitive(zeta: Substitution) -> IntMatrix:
    """원시성을 확인하고 치환 행렬을 반환합니다."""
    S = substitution_matrix(zeta)
    if not is_primitive(S):
        logger.error(f"substitution {zeta} is not primitive")
        raise InputError("substitution is not primitive")
    return S


def aperiodicity_gate(zeta: Substitution) -> Aperiodicity:
    """
    θ₁의 최소다항식 차수가 2 이상 (θ₁ 무리수) 이면 비주기적임을 확인합니다.

    Returns:
        Aperiodicity: APERIODIC 또는 UNKNOWN.
    """
    S = substitution_matrix(zeta)
    p = char_poly(S)
    boxes = roots_numeric(IntPoly.from_sympy(p.poly.sqf_part()))
    perron = next((b for b in boxes if b.is_perron), None)
    if perron is None:
        logger.warning(f"no Perron root flagged for {zeta}")
        return Aperiodicity.UNKNOWN
    minimal = minimal_poly_of_root(p, perron)
    logger.debug(f"minimal polynomial of the Perron root: {minimal}")
    return Aperiodicity.APERIODIC if minimal.degree >= 2 else Aperiodicity.UNKNOWN


def make_family(params: FamilyParams) -> Substitution:
    """
    내장 치환 족의 규칙을 생성합니다.

    - zeta_m (m ≥ 3): 0 ↦ 0^m 1 2, 1 ↦ 1^{2m} 0 2, 2 ↦ 0 1 2 2
    - sigma_m (m ≥ 1): 0 ↦ (01)^m 2, 1 ↦ 2 (10)^m, 2 ↦ 1^{2m+2}
    - zeta_mAB: 0 ↦ A 2, 1 ↦ 2 B, 2 ↦ 0 2 2 (A, B ∈ {0,1}^m, A ≠ 0^m, 8k²+8k+14 ≤ m)

    Raises:
        InputError: 족의 제약 조건을 위반한 경우. 위반한 부등식을 메시지에 포함합니다.
    """
    m = params.m
    match params.family:
        case FamilyTag.ZETA_M:
            if m < 3:
                raise InputError(f"zeta_m requires m >= 3, got m = {m}")
            rules = ["0" * m + "12", "1" * (2 * m) + "02", "0122"]
        case FamilyTag.SIGMA_M:
            if m < 1:
                raise InputError(f"sigma_m requires m >= 1, got m = {m}")
            rules = ["01" * m + "2", "2" + "10" * m, "1" * (2 * m + 2)]
        case FamilyTag.ZETA_MAB:
            A, B = params.A, params.B
            if A is None or B is None:
                raise InputError("zeta_mAB requires both words A and B")
            for name, word in (("A", A), ("B", B)):
                if len(word) != m or set(word) - {"0", "1"}:
                    raise InputError(f"word {name} must be a 0/1 string of length m = {m}")
            if A == "0" * m:
                raise InputError("zeta_mAB requires A != 0^m")
            k = params.minority_count
            threshold = 8 * k * k + 8 * k + 14
            if threshold > m:
                logger.error(f"zeta_mAB constraint violated: 8k^2+8k+14 = {threshold} > m = {m} (k = {k})")
                raise InputError(f"constraint 8k^2+8k+14 <= m violated: {threshold} > {m} with k = {k}")
            rules = [A + "2", "2" + B, "022"]
        case _:
            raise InputError(f"unknown family {params.family!r}")
    return Substitution.of(3, rules)
