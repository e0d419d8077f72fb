"""세 번째 내장 치환 족 ζ_{m,A,B} 의 Gram majorant 를 만듭니다."""

import logging

from specto.errors import InputError, InvariantError
from specto.linalg import MinimalSubspace
from specto.substitution import FamilyParams, FamilyTag

from .laurent import ClearingFactor, LaurentPoly

logger = logging.getLogger(__name__)


def _image(V: MinimalSubspace, letter: int) -> tuple[int, ...]:
    return tuple(column[letter] for column in V.lattice_basis)


def family_majorant(params: FamilyParams, V: MinimalSubspace) -> tuple[LaurentPoly, list[ClearingFactor]]:
    """
    ζ_{m,A,B} 의 본질 Gram 다항식을 위에서 누르는 Laurent 다항식과 clearing factor 를 반환합니다.

    q = 1 + u + … + u^{m−1} (u 는 문자 0, 1 의 진동수 방향) 일 때
    majorant = (2+2k)|q|² + 4k²+2k+3 + |1+w|² 이며, |u−1|² 를 곱한 상수항은 8k²+8k+14 입니다.

    Args:
        params (FamilyParams): zeta_mAB 족 매개변수.
        V (MinimalSubspace): 1⃗ 의 최소 부분공간 (격자 좌표의 방향을 정합니다).

    Returns:
        tuple[LaurentPoly, list[ClearingFactor]]: majorant 와 clearing factor 목록.
    """
    if params.family != FamilyTag.ZETA_MAB:
        raise InputError(f"a built-in majorant exists only for zeta_mAB, got {params.family.value}")
    if V.ambient_dim != 3:
        raise InputError("zeta_mAB lives on a three-letter alphabet")
    u, w = _image(V, 0), _image(V, 2)
    if _image(V, 1) != u:
        logger.error(f"letters 0 and 1 have different lattice images {u} and {_image(V, 1)}")
        raise InvariantError("letters 0 and 1 must share a frequency direction on the minimal subspace")
    r, k = V.rank, params.minority_count
    q = LaurentPoly.from_terms(r, ((tuple(j * a for a in u), 1) for j in range(params.m)))
    one_plus_w = LaurentPoly.constant(r, 1) + LaurentPoly.monomial(w)
    majorant = q.squared_modulus().scale(2 + 2 * k) + LaurentPoly.constant(r, 4 * k * k + 2 * k + 3) + one_plus_w.squared_modulus()
    logger.debug(f"family majorant for m={params.m}, k={k} with direction {u}")
    return majorant, [ClearingFactor.from_step(u)]
