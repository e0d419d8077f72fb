# 설계 방향 및 원칙:
# - 핵심 책임: 조건 목록, χ 상한, θ₁ 비교를 조립하여 Z-작용과 R-작용 (PF 핵 부분공간) 의 특이 스펙트럼 판정서를 만듭니다.
# - 설계 원칙: SINGULAR_CERTIFIED 는 정수 상수항 C_k 와 Collatz–Wielandt 유리수 하한의 정확한 비교 C_k < θ₁_lower^k 로만 부여합니다.
#              격자 검사 majorant 와 Monte Carlo 결과는 SINGULAR_NUMERICAL 근거로만 사용합니다.
# - 기술적 고려사항: S_ζᵗ 의 최소 부분공간이 특이하면 영 고유값 성분을 제거하고, 퇴화이면 ζ 를 거듭제곱하여 다시 구성합니다.
# - 사용 시 고려사항: 비주기성이 확인되지 않으면 (θ₁ 유리수) 판정을 INCONCLUSIVE 로 낮춥니다.

import itertools
import logging
import math
from collections.abc import Sequence
from fractions import Fraction

import mpmath

from specto.bounds import (
    BoundCertificate,
    best_cleared_bound,
    detect_geometric_runs,
    family_majorant,
    majorant_bound,
    quadrature_bound,
    symbol_for_power,
)
from specto.cocycle import build_symbol, essential_symbol
from specto.equidist import Witness, degenerate_witness, unit_root_witness
from specto.errors import GridViolationError, InputError, InvariantError, PrecisionError
from specto.linalg import (
    IntMatrix,
    IntPoly,
    MinimalSubspace,
    RatVector,
    char_poly,
    collatz_wielandt_lower,
    collatz_wielandt_upper,
    coordinates,
    cyclic_subspace,
    determinant,
    integer_kernel,
    is_primitive,
    poly_at_matrix,
    project_remark_b,
    subspace_from_basis,
)
from specto.lyapunov import attach_bounds, mc_exponent
from specto.polyalg import RootBox, has_unit_root, is_degenerate, minimal_poly_of_root, nondegenerate_power, roots_numeric
from specto.polyalg.const import GUARD_DIGITS
from specto.settings.config import Settings
from specto.substitution import (
    Aperiodicity,
    FamilyTag,
    Substitution,
    aperiodicity_gate,
    check_primitive,
    power,
    substitution_matrix,
)

from .const import PF_MAX_ITERATIONS, ActionKind, Decision
from .schema import AnalysisOptions, ChiBound, ConditionRecord, PFKernel, SingularityCertificate

logger = logging.getLogger(__name__)


def _positive_power(A: IntMatrix) -> IntMatrix:
    P = A
    for _ in range((A.dim - 1) ** 2 + 1):
        if all(a > 0 for row in P.entries for a in row):
            return P
        P = P @ A
    logger.error("PF vector enclosure requested for a non-primitive matrix")
    raise InputError("matrix has no entrywise positive power")


def _projective_diameter(P: IntMatrix) -> Fraction:
    """max P_ij·P_kl / (P_il·P_kj), 즉 exp(Δ(P)) 입니다."""
    rows = P.entries
    return max(
        Fraction(rows[i][j] * rows[k][l], rows[i][l] * rows[k][j])
        for i, k in itertools.combinations_with_replacement(range(P.dim), 2)
        for j, l in itertools.product(range(P.dim), repeat=2)
    )


def _hilbert_growth(P: IntMatrix, u: Sequence[Fraction]) -> Fraction:
    """
    정규화된 u 와 PF 벡터 v* 의 성분별 비 v*_i/u_i 가 [e^-δ, e^δ] 에 있도록 하는 e^δ − 1 의 유리수 상한입니다.

    δ ≤ d_H(u, Pu)/(1 − τ), τ = tanh(Δ/4) 이고 1/(1 − τ) = (√Q + 1)/2, Q = exp(Δ) 입니다.
    log r ≤ r − 1, √Q ≤ ⌊√(pq)⌋/q + 1/q, e^D − 1 ≤ D/(1 − D) 로 모두 위에서 누릅니다.

    Raises:
        PrecisionError: δ 의 상한이 1 이상인 경우.
    """
    ratios = [x / y for x, y in zip(P.apply(u), u, strict=True)]
    log_spread = max(ratios) / min(ratios) - 1
    Q = _projective_diameter(P)
    sqrt_Q = Fraction(math.isqrt(Q.numerator * Q.denominator) + 1, Q.denominator)
    D = log_spread * (sqrt_Q + 1) / 2
    if D >= 1:
        logger.error(f"Hilbert distance bound {float(D):.3e} is too large for an enclosure")
        raise PrecisionError("PF iterate is too far from the eigenvector", achieved_radius=float(D))
    return D / (1 - D)


def pf_vector_enclosure(S: IntMatrix) -> tuple[RootBox, ...]:
    """
    S_ζᵗ 의 PF 고유벡터 (성분 합 1) 를 mpmath 거듭제곱 반복으로 근사하고 성분별 포함 구간을 반환합니다.

    반복값 u 를 유리수로 고정한 뒤, 양의 거듭제곱 P = (S_ζᵗ)^m 의 Hilbert 사영 거리 축소율 (Birkhoff)
    로 v* 와의 거리를 정확한 유리수 연산으로 위에서 누릅니다. 반지름은 u_i·(e^δ − 1) 의 상한입니다.

    Raises:
        InputError: 양의 거듭제곱이 없는 경우.
        PrecisionError: 반올림된 반복값에 0 성분이 생기거나 거리 상한이 너무 큰 경우.
    """
    ctx = mpmath.MPContext()
    ctx.dps = Settings.SPECTO_ROOT_DPS + GUARD_DIGITS
    A = S.transpose()
    P = _positive_power(A)
    d = A.dim
    u = [ctx.mpf(1) / d] * d
    tolerance = ctx.mpf(10) ** (-Settings.SPECTO_ROOT_DPS)
    delta = ctx.mpf(1)
    for _ in range(PF_MAX_ITERATIONS):
        w = [ctx.fsum(a * x for a, x in zip(row, u, strict=True)) for row in A.entries]
        total = ctx.fsum(w)
        w = [x / total for x in w]
        delta = max(abs(a - b) for a, b in zip(w, u, strict=True))
        u = w
        if delta < tolerance:
            break
    else:
        logger.warning(f"PF power iteration stopped at change {delta}; the enclosure will be wide")
    scale = 10**ctx.dps
    rounded = [Fraction(int(ctx.nint(x * scale)), scale) for x in u]
    if any(x <= 0 for x in rounded):
        logger.error("rounded PF iterate has a non-positive component")
        raise PrecisionError("PF iterate is not strictly positive", achieved_radius=float(delta))
    total = sum(rounded)
    exact = [x / total for x in rounded]
    growth = _hilbert_growth(P, exact)
    boxes = []
    for x in exact:
        center = ctx.mpf(x.numerator) / x.denominator
        boxes.append(RootBox(center, ctx.mpf(0), center * growth.numerator / growth.denominator + tolerance))
    logger.debug(f"PF vector enclosure radius factor {float(growth):.3e}")
    return tuple(boxes)


def pf_kernel_subspace(S: IntMatrix) -> PFKernel:
    """
    p_θ₁ (θ₁ 의 최소다항식) 에 대해 U = ker p_θ₁(S_ζᵗ) 를 포화된 격자 기저와 함께 구합니다.

    Args:
        S (IntMatrix): 원시 치환 행렬.

    Returns:
        PFKernel: p_θ₁, U, PF 고유벡터 포함 원판.

    Raises:
        InvariantError: 핵 차원이 deg p_θ₁ 와 다른 경우.
    """
    if not is_primitive(S):
        raise InputError("PF kernel requires a primitive matrix")
    p = char_poly(S)
    boxes = roots_numeric(IntPoly.from_sympy(p.poly.sqf_part()))
    perron = next((b for b in boxes if b.is_perron), None)
    if perron is None:
        logger.error("no Perron root among the isolated roots")
        raise InvariantError("Perron root not found")
    p_theta = minimal_poly_of_root(p, perron)
    A = S.transpose()
    kernel = integer_kernel(poly_at_matrix(p_theta.coefficients, A).entries)
    if len(kernel) != p_theta.degree:
        logger.error(f"kernel of p_theta1(S^t) has dimension {len(kernel)}, expected {p_theta.degree}")
        raise InvariantError("kernel dimension differs from the degree of p_theta1")
    U = subspace_from_basis(A, kernel)
    logger.info(f"PF kernel: p_theta1 = {p_theta}, rank {U.rank}")
    return PFKernel(p_theta, U, pf_vector_enclosure(S))


def _cyclic_with_projection(A: IntMatrix, v: RatVector, notes: list[str]) -> tuple[MinimalSubspace, bool, RatVector]:
    V = cyclic_subspace(A, v)
    if determinant(V.restriction) != 0:
        return V, False, v
    v1, m = project_remark_b(A, v)
    left, right = v.entries, v1.entries
    for _ in range(m):
        left, right = A.apply(left), A.apply(right)
    for n in range(m, m + 3):
        if left != right:
            logger.error(f"projected vector differs from the original after {n} steps")
            raise InvariantError(f"A^n v != A^n v1 at n = {n}")
        left, right = A.apply(left), A.apply(right)
    notes.append(f"restriction was singular; removed the nilpotent part of order {m}")
    return cyclic_subspace(A, v1), True, v1


def essential_subspace(zeta: Substitution, notes: list[str] | None = None) -> tuple[MinimalSubspace, bool]:
    """
    S_ζᵗ 에 대한 1⃗ 의 최소 부분공간을 구합니다. 제한 행렬이 특이하면 영 고유값 성분을 제거한 벡터로 다시 구합니다.

    Returns:
        tuple[MinimalSubspace, bool]: (부분공간, 영 고유값 성분 제거 여부).
    """
    A = substitution_matrix(zeta).transpose()
    V, applied, _ = _cyclic_with_projection(A, RatVector.ones(A.dim), [] if notes is None else notes)
    return V, applied


def _record(conditions: list[ConditionRecord], record: ConditionRecord) -> None:
    """같은 이름의 조건이 이미 있으면 교체하여 조건마다 항목 하나만 남깁니다."""
    for i, existing in enumerate(conditions):
        if existing.name == record.name:
            conditions[i] = record
            return
    conditions.append(record)


def _cyclic_coordinates(V: MinimalSubspace, v: RatVector | None) -> RatVector:
    """증거 계산에 쓸 B 의 순환 벡터를 격자 좌표로 구합니다. v 가 없으면 첫 기저 벡터를 씁니다."""
    if v is None:
        return RatVector.of([1] + [0] * (V.rank - 1))
    return RatVector.of(coordinates(V, v.entries))


def _theta_comparison(S: IntMatrix, constant: int, k: int, rounds: int) -> tuple[bool, Fraction, Fraction, int]:
    """
    Collatz–Wielandt 반복 u ← S·u 로 θ₁ 의 하한/상한을 좁히며 constant < lower^k 를 확인합니다.

    Returns:
        tuple[bool, Fraction, Fraction, int]: (성립 여부, 하한, 상한, 사용한 반복 수).
    """
    u: Sequence[int] = (1,) * S.dim
    lower, upper = collatz_wielandt_lower(S, u), collatz_wielandt_upper(S, u)
    for used in range(rounds):
        if constant < lower**k:
            return True, lower, upper, used
        if constant >= upper**k:
            return False, lower, upper, used
        u = S.apply(u)
        lower = max(lower, collatz_wielandt_lower(S, u))
        upper = min(upper, collatz_wielandt_upper(S, u))
    return constant < lower**k, lower, upper, rounds


def _rigorous_bound(zeta: Substitution, V: MinimalSubspace, k_max: int) -> BoundCertificate:
    candidates = []
    for k in range(1, k_max + 1):
        sym = symbol_for_power(zeta, V, k)
        candidates.append(best_cleared_bound(sym, detect_geometric_runs(sym), k=k))
    best = min(candidates, key=lambda c: c.bound)
    logger.info(f"rigorous chi bound {best.bound:.6f} (method {best.method.value}, k = {best.k}, C = {best.constant_term})")
    return best


def _restriction_conditions(
    V: MinimalSubspace,
    conditions: list[ConditionRecord],
    power_used: int,
) -> bool:
    B = V.restriction
    if determinant(B) == 0:
        _record(conditions, ConditionRecord(name="restriction_nonsingular", passed=False, detail=f"restriction matrix is singular at power {power_used}"))
        return False
    _record(conditions, ConditionRecord(name="restriction_nonsingular", passed=True, detail=f"power {power_used}"))
    return True


def _degeneracy_condition(
    V: MinimalSubspace,
    v: RatVector | None,
    conditions: list[ConditionRecord],
    power_used: int,
    history: str,
) -> int | None:
    """
    제한 행렬의 비퇴화 조건을 기록하고 퇴화 위수를 반환합니다.

    거듭제곱 뒤에도 퇴화이면 ⟨B^{kn}c, h⟩ = 0 증거를 붙입니다.
    """
    order = is_degenerate(V.restriction)
    if order is None:
        detail = f"power {power_used}" + (f"; {history}" if history else "")
        _record(conditions, ConditionRecord(name="non_degenerate", passed=True, detail=detail))
        return None
    if power_used > 1:
        h = degenerate_witness(V.restriction, _cyclic_coordinates(V, v), order)
        _record(
            conditions,
            ConditionRecord(
                name="non_degenerate",
                passed=False,
                detail=f"still degenerate at power {power_used} (ratio order {order}); witness in lattice coordinates",
                witness=Witness(h=list(h), k=order),
            ),
        )
    return order


def _unit_root_condition(V: MinimalSubspace, v: RatVector | None, conditions: list[ConditionRecord]) -> bool:
    order = has_unit_root(char_poly(V.restriction))
    if order is not None:
        h = unit_root_witness(V.restriction, _cyclic_coordinates(V, v), order)
        _record(
            conditions,
            ConditionRecord(
                name="no_unit_root_eigenvalue",
                passed=False,
                detail=f"restriction has a primitive {order}-th root of unity as eigenvalue; witness in lattice coordinates",
                witness=Witness(h=list(h), k=order),
            ),
        )
        return False
    _record(conditions, ConditionRecord(name="no_unit_root_eigenvalue", passed=True))
    return True


def _decide(
    action: ActionKind,
    original: Substitution,
    zeta: Substitution,
    V: MinimalSubspace,
    options: AnalysisOptions,
    conditions: list[ConditionRecord],
    notes: list[str],
    aperiodicity: Aperiodicity,
    power_used: int,
    remark_b_applied: bool,
) -> SingularityCertificate:
    S = substitution_matrix(zeta)
    rigorous = _rigorous_bound(zeta, V, options.k_max)
    certified, lower, upper, rounds = _theta_comparison(S, rigorous.constant_term, rigorous.k, options.iters)
    chi_bound = ChiBound(value=rigorous.bound, method=rigorous.method, certificate=rigorous)
    supplementary: list[BoundCertificate] = []
    decision = Decision.SINGULAR_CERTIFIED if certified else Decision.INCONCLUSIVE

    majorant = options.majorant
    if majorant is None and options.family is not None and options.family.family == FamilyTag.ZETA_MAB and power_used == 1:
        majorant = family_majorant(options.family, V)
    if majorant is not None:
        sym = essential_symbol(build_symbol(zeta), V)
        try:
            grid = majorant_bound(sym, majorant[0], majorant[1])
        except GridViolationError as e:
            notes.append(f"majorant rejected: exceeded by {e.excess:.3e} at {e.point}")
        else:
            supplementary.append(grid)
            grid_ok, grid_lower, grid_upper, grid_rounds = _theta_comparison(S, grid.constant_term, grid.k, options.iters)
            if not certified and grid_ok:
                lower, upper, rounds = grid_lower, grid_upper, grid_rounds
                decision = Decision.SINGULAR_NUMERICAL
                chi_bound = ChiBound(value=grid.bound, method=grid.method, certificate=grid)

    lyapunov_estimate = None
    if options.numerical:
        estimate = mc_exponent(
            zeta, V, options.lyapunov_steps, options.lyapunov_samples, seed=options.seed, threads=options.threads, precision_bits=options.precision_bits
        )
        lyapunov_estimate = attach_bounds(estimate, [rigorous])

    if decision == Decision.INCONCLUSIVE and options.numerical:
        sym = essential_symbol(build_symbol(zeta), V)
        estimate = quadrature_bound(sym, V.restriction, options.k_max, options.samples, options.seed, options.threads)
        supplementary.append(estimate)
        if 2 * (estimate.bound + 3 * estimate.std_error) < math.log(lower):
            decision = Decision.SINGULAR_NUMERICAL
            chi_bound = ChiBound(value=estimate.bound, method=estimate.method, certificate=estimate)
            notes.append("Monte Carlo evidence only; not a proof")

    if decision != Decision.INCONCLUSIVE and aperiodicity == Aperiodicity.UNKNOWN:
        logger.warning(f"downgrading {decision.value}: aperiodicity of {original} is not confirmed")
        notes.append(f"bound comparison gave {decision.value}, but aperiodicity is not confirmed")
        decision = Decision.INCONCLUSIVE
    if power_used > 1:
        notes.append(f"theta_1 bounds refer to the substitution power {power_used}")
    logger.info(f"decision {decision.value} for {action.value}-action (theta_1 >= {float(lower):.6f})")
    return SingularityCertificate(
        action=action,
        substitution=original.to_json(),
        conditions=conditions,
        chi_bound=chi_bound,
        supplementary_bounds=supplementary,
        theta1_lower=lower,
        theta1_upper=upper,
        cw_rounds=rounds,
        decision=decision,
        power_used=power_used,
        remark_b_applied=remark_b_applied,
        aperiodicity=aperiodicity,
        subspace=V.to_json(),
        lyapunov_estimate=lyapunov_estimate,
        notes=notes,
    )


def _failed(
    action: ActionKind,
    zeta: Substitution,
    conditions: list[ConditionRecord],
    notes: list[str],
    aperiodicity: Aperiodicity,
    power_used: int,
    remark_b_applied: bool,
    V: MinimalSubspace,
) -> SingularityCertificate:
    failed = next(c for c in conditions if not c.passed)
    logger.info(f"condition {failed.name} failed: {failed.detail}")
    return SingularityCertificate(
        action=action,
        substitution=zeta.to_json(),
        conditions=conditions,
        decision=Decision.CONDITIONS_FAIL,
        power_used=power_used,
        remark_b_applied=remark_b_applied,
        aperiodicity=aperiodicity,
        subspace=V.to_json(),
        notes=notes,
    )


def analyze_z_action(zeta: Substitution, options: AnalysisOptions | None = None) -> SingularityCertificate:
    """
    치환 Z-작용의 순수 특이 스펙트럼 여부를 판정합니다.

    V = cyclic(S_ζᵗ, 1⃗) 에서 시작하여 제한 행렬이 특이하면 영 고유값 성분을 제거하고,
    퇴화이면 ζ 를 nondegenerate_power 만큼 거듭제곱한 뒤 χ 상한과 θ₁ 하한을 비교합니다.

    Args:
        zeta (Substitution): 원시 치환.
        options (AnalysisOptions | None): 파이프라인 옵션.

    Returns:
        SingularityCertificate: 판정서.
    """
    options = options or AnalysisOptions()
    check_primitive(zeta)
    aperiodicity = aperiodicity_gate(zeta)
    conditions = [ConditionRecord(name="primitive", passed=True)]
    notes: list[str] = []
    current, power_used, history = zeta, 1, ""
    while True:
        A = substitution_matrix(current).transpose()
        V, remark_b, v_used = _cyclic_with_projection(A, RatVector.ones(A.dim), notes)
        logger.info(f"minimal subspace of the all-ones vector has rank {V.rank} (power {power_used})")
        if not _restriction_conditions(V, conditions, power_used):
            return _failed(ActionKind.Z, zeta, conditions, notes, aperiodicity, power_used, remark_b, V)
        order = _degeneracy_condition(V, v_used, conditions, power_used, history)
        if order is None:
            break
        if power_used > 1:
            return _failed(ActionKind.Z, zeta, conditions, notes, aperiodicity, power_used, remark_b, V)
        power_used = nondegenerate_power(V.restriction)
        history = f"power 1 was degenerate with ratio order {order}"
        notes.append(f"restriction is degenerate (ratio order {order}); replaced the substitution by its power {power_used}")
        current = power(zeta, power_used)
    if not _unit_root_condition(V, v_used, conditions):
        return _failed(ActionKind.Z, zeta, conditions, notes, aperiodicity, power_used, remark_b, V)
    return _decide(ActionKind.Z, zeta, current, V, options, conditions, notes, aperiodicity, power_used, remark_b)


def analyze_r_action(
    zeta: Substitution,
    vector_spec: str | RatVector | Sequence[int | str | Fraction] = "pf",
    options: AnalysisOptions | None = None,
) -> SingularityCertificate:
    """
    치환 R-작용 (자기유사 또는 양의 유리수 벡터) 의 순수 특이 스펙트럼 여부를 U = ker p_θ₁(S_ζᵗ) 위에서 판정합니다.

    Args:
        zeta (Substitution): 원시 치환.
        vector_spec: "pf" (자기유사 작용) 또는 U 에 속하는 양의 유리수 벡터.
        options (AnalysisOptions | None): 파이프라인 옵션.

    Raises:
        InputError: 벡터가 양수가 아니거나 U 에 속하지 않는 경우.
    """
    options = options or AnalysisOptions()
    S = check_primitive(zeta)
    aperiodicity = aperiodicity_gate(zeta)
    kernel = pf_kernel_subspace(S)
    conditions = [ConditionRecord(name="primitive", passed=True)]
    notes: list[str] = []
    cyclic_vector: RatVector | None = None
    if isinstance(vector_spec, str) and vector_spec == "pf":
        action = ActionKind.R_SELFSIMILAR
        if not all(box.center_re - box.radius > 0 for box in kernel.pf_vector_box):
            logger.error("PF vector enclosure is not strictly positive")
            raise PrecisionError("PF vector enclosure is not strictly positive")
        conditions.append(ConditionRecord(name="positive_vector", passed=True, detail="PF eigenvector enclosure"))
    else:
        action = ActionKind.R_VECTOR
        v = vector_spec if isinstance(vector_spec, RatVector) else RatVector.of(vector_spec)
        if v.dim != S.dim or not v.is_positive():
            logger.error(f"vector {v.to_json()} is not a positive vector of dimension {S.dim}")
            raise InputError("vector must be strictly positive with one entry per letter")
        coordinates(kernel.subspace, v.entries)
        cyclic_vector = v
        conditions.append(ConditionRecord(name="positive_vector", passed=True, detail="vector lies in ker p_theta1(S^t)"))
    if kernel.subspace.rank == S.dim:
        notes.append("characteristic polynomial is irreducible: any positive vector can be taken")

    U, current, power_used, history = kernel.subspace, zeta, 1, ""
    while True:
        if not _restriction_conditions(U, conditions, power_used):
            return _failed(action, zeta, conditions, notes, aperiodicity, power_used, False, U)
        order = _degeneracy_condition(U, cyclic_vector, conditions, power_used, history)
        if order is None:
            break
        if power_used > 1:
            return _failed(action, zeta, conditions, notes, aperiodicity, power_used, False, U)
        power_used = nondegenerate_power(U.restriction)
        history = f"power 1 was degenerate with ratio order {order}"
        notes.append(f"restriction is degenerate (ratio order {order}); replaced the substitution by its power {power_used}")
        current = power(zeta, power_used)
        U = pf_kernel_subspace(substitution_matrix(current)).subspace
    if not _unit_root_condition(U, cyclic_vector, conditions):
        return _failed(action, zeta, conditions, notes, aperiodicity, power_used, False, U)
    return _decide(action, zeta, current, U, options, conditions, notes, aperiodicity, power_used, False)
