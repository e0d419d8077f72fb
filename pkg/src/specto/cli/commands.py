# 설계 방향 및 원칙:
# - 핵심 책임: 각 하위 명령의 실행 로직을 입력 dict → Report 로 구현하여 CLI 와 MCP 도구가 함께 사용합니다.
# - 설계 원칙: 명령 함수는 출력 형식을 모르며, 직렬화와 종료 코드는 호출 측이 담당합니다.
# - 사용 시 고려사항: 모든 난수는 seed 하나에서 파생되므로 같은 입력과 seed 는 같은 결과를 냅니다.

import logging
import time
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

import numpy as np

from specto.bounds import (
    BoundCertificate,
    best_cleared_bound,
    cleared_jensen_bound,
    detect_geometric_runs,
    family_majorant,
    jensen_bound,
    majorant_bound,
    merge_clearings,
    quadrature_bound,
    symbol_for_power,
)
from specto.cocycle import FixedPointTorusPoint
from specto.equidist import orbit_mod1, ud_conditions, ud_experiment
from specto.errors import InputError
from specto.linalg import IntMatrix, RatVector
from specto.lyapunov import attach_bounds, mc_exponent, working_precision
from specto.settings.config import Settings
from specto.substitution import FamilyParams, FamilyTag, Substitution, check_primitive, make_family, parse_substitution
from specto.verdict import (
    ActionKind,
    AnalysisOptions,
    Decision,
    SingularityCertificate,
    analyze_r_action,
    analyze_z_action,
    essential_subspace,
)

from .const import (
    FAMILY1_CONSTANT,
    FAMILY1_M,
    FAMILY2_CONSTANT,
    FAMILY2_M,
    FAMILY3_A,
    FAMILY3_B,
    FAMILY3_M,
)
from .schema import Report

logger = logging.getLogger(__name__)

ACTIONS = ("z", "r-selfsimilar", "r-vector")
BOUND_METHODS = ("auto", "jensen", "cleared", "majorant", "monte-carlo")


def tool_version() -> str:
    try:
        return version("specto")
    except PackageNotFoundError:
        return "0.0.0+local"


def _report(command: str, payload: dict[str, Any], result: dict[str, Any], started: float, seeds: dict[str, int] | None = None) -> Report:
    return Report(
        tool_version=tool_version(),
        command=command,
        input=payload,
        result=result,
        timing_seconds=round(time.perf_counter() - started, 3),
        seeds=seeds or {},
    )


def load_substitution(source: dict[str, Any] | str | Path) -> tuple[Substitution, FamilyParams | None, dict[str, Any]]:
    """입력을 해석하고, 보고서에 되돌려 줄 입력 요약을 함께 반환합니다."""
    zeta, params = parse_substitution(source)
    echo = params.to_json() if params is not None else zeta.to_json()
    return zeta, params, echo


def parse_vector(text: str | list) -> RatVector:
    """'1,1,1/2' 형식의 문자열이나 목록을 유리수 벡터로 바꿉니다."""
    items = text.split(",") if isinstance(text, str) else text
    try:
        return RatVector.of(str(item).strip() for item in items)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"malformed rational vector {text!r}: {e}") from e


def cmd_analyze(
    source: dict[str, Any] | str | Path,
    actions: list[str] | None = None,
    vector: str | list | None = None,
    k_max: int = 1,
    samples: int = 2000,
    iters: int | None = None,
    seed: int | None = None,
    precision_bits: int | None = None,
    numerical: bool = False,
    threads: int | None = None,
) -> Report:
    """
    Z-작용 및 R-작용 판정을 실행합니다.

    Args:
        source: 치환 JSON 또는 족 축약.
        actions: "z", "r-selfsimilar", "r-vector" 중 실행할 작용 목록. 기본값은 ["z"].
        vector: r-vector 작용의 양의 유리수 벡터.

    Returns:
        Report: result["certificates"] 에 판정서 목록.
    """
    started = time.perf_counter()
    actions = actions or ["z"]
    unknown = [a for a in actions if a not in ACTIONS]
    if unknown:
        raise InputError(f"unknown action(s) {unknown}; expected {list(ACTIONS)}")
    if "r-vector" in actions and vector is None:
        raise InputError("action r-vector requires --vector")
    zeta, params, echo = load_substitution(source)
    options = AnalysisOptions(
        k_max=k_max,
        samples=samples,
        iters=iters if iters is not None else Settings.SPECTO_CW_ROUNDS,
        seed=seed if seed is not None else Settings.SPECTO_SEED,
        numerical=numerical,
        precision_bits=precision_bits,
        family=params,
        threads=threads,
    )
    certificates: list[SingularityCertificate] = []
    for action in actions:
        match action:
            case "z":
                certificates.append(analyze_z_action(zeta, options))
            case "r-selfsimilar":
                certificates.append(analyze_r_action(zeta, "pf", options))
            case "r-vector":
                certificates.append(analyze_r_action(zeta, parse_vector(vector), options))
    result = {"certificates": [c.model_dump(mode="json") for c in certificates]}
    return _report("analyze", {"substitution": echo, "actions": actions}, result, started, {"seed": options.seed})


def cmd_ud_check(
    matrix: list[list[int | str]],
    vector: list[int | str] | str,
    empirical: bool = False,
    n_steps: int = 10_000,
    h_max: int = 3,
    omegas: int = 10,
    seed: int | None = None,
    precision_bits: int | None = None,
    threads: int | None = None,
) -> Report:
    """균등분포 조건을 판정하고, 요청하면 Weyl 합 실험을 덧붙입니다."""
    started = time.perf_counter()
    A = IntMatrix.of(matrix)
    v = parse_vector(vector)
    seed = Settings.SPECTO_SEED if seed is None else seed
    result: dict[str, Any] = {"verdict": ud_conditions(A, v).model_dump(mode="json")}
    if empirical:
        experiment = ud_experiment(A, v, n_steps, h_max, n_omegas=omegas, seed=seed, precision_bits=precision_bits, threads=threads)
        result["empirical"] = experiment.model_dump(mode="json")
    return _report("ud-check", {"matrix": A.to_json(), "vector": v.to_json()}, result, started, {"seed": seed})


def cmd_lyapunov(
    source: dict[str, Any] | str | Path,
    n_steps: int = 200,
    samples: int = 256,
    k_max: int = 1,
    seed: int | None = None,
    precision_bits: int | None = None,
    threads: int | None = None,
) -> Report:
    """본질 Lyapunov 지수를 추정하고 k ≤ k_max 의 엄밀한 상한과 비교합니다."""
    started = time.perf_counter()
    zeta, _, echo = load_substitution(source)
    check_primitive(zeta)
    seed = Settings.SPECTO_SEED if seed is None else seed
    V, remark_b = essential_subspace(zeta)
    estimate = mc_exponent(zeta, V, n_steps, samples, seed=seed, threads=threads, precision_bits=precision_bits)
    bounds = []
    for k in range(1, k_max + 1):
        sym = symbol_for_power(zeta, V, k)
        bounds.append(best_cleared_bound(sym, detect_geometric_runs(sym), k=k))
    estimate = attach_bounds(estimate, bounds)
    result = {"estimate": estimate.model_dump(mode="json"), "subspace": V.to_json(), "remark_b_applied": remark_b}
    return _report("lyapunov", {"substitution": echo}, result, started, {"seed": seed})


def cmd_bound(
    source: dict[str, Any] | str | Path,
    k: int = 1,
    method: str = "auto",
    samples: int = 4096,
    seed: int | None = None,
    threads: int | None = None,
) -> Report:
    """
    χ 상한 하나를 계산합니다.

    method:
        auto: 제안된 clearing 부분집합 중 상수항이 가장 작은 것.
        jensen: clearing 없는 상수항.
        cleared: 제안된 clearing 전체를 합쳐 적용.
        majorant: 내장 majorant (zeta_mAB 족) 의 격자 검사.
        monte-carlo: (1/k)∫log‖M̃(s, k)‖ 의 구적 추정.
    """
    started = time.perf_counter()
    if method not in BOUND_METHODS:
        raise InputError(f"unknown bound method {method!r}; expected {list(BOUND_METHODS)}")
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    zeta, params, echo = load_substitution(source)
    check_primitive(zeta)
    seed = Settings.SPECTO_SEED if seed is None else seed
    V, _ = essential_subspace(zeta)
    certificate: BoundCertificate
    match method:
        case "jensen":
            certificate = jensen_bound(zeta, V, k)
        case "auto" | "cleared":
            sym = symbol_for_power(zeta, V, k)
            proposals = detect_geometric_runs(sym)
            if method == "auto":
                certificate = best_cleared_bound(sym, proposals, k=k)
            else:
                certificate = cleared_jensen_bound(sym, merge_clearings(proposals), k=k)
        case "majorant":
            if params is None or params.family != FamilyTag.ZETA_MAB:
                raise InputError("the built-in majorant is available for the zeta_mAB family only")
            majorant, clearings = family_majorant(params, V)
            certificate = majorant_bound(symbol_for_power(zeta, V, 1), majorant, clearings)
        case _:
            sym = symbol_for_power(zeta, V, 1)
            certificate = quadrature_bound(sym, V.restriction, k, samples, seed, threads)
    result = {"bound": certificate.model_dump(mode="json"), "subspace": V.to_json()}
    return _report("bound", {"substitution": echo, "k": k, "method": method}, result, started, {"seed": seed})


def cmd_orbit(
    matrix: list[list[int | str]],
    x0: list[str | int],
    n_steps: int,
    precision_bits: int | None = None,
) -> np.ndarray:
    """고정소수점 궤도의 배정밀도 스냅샷 (n_steps, r) 을 반환합니다. x0 는 유리수 좌표입니다."""
    A = IntMatrix.of(matrix)
    try:
        coords = [Fraction(str(c)) for c in x0]
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"malformed starting point {x0!r}: {e}") from e
    bits = working_precision(A, n_steps, precision_bits)
    return orbit_mod1(A, FixedPointTorusPoint.from_fractions(coords, bits), n_steps)


def _constant(certificate: dict) -> int | None:
    bound = certificate.get("chi_bound")
    return None if bound is None else int(bound["certificate"]["constant_term"])


def cmd_reproduce(threads: int | None = None) -> Report:
    """
    세 내장 족의 기준값 (상수항 40, 16, 8k²+8k+14) 과 판정을 재현합니다.
    불일치는 Report.discrepancies 에 기록됩니다.
    """
    started = time.perf_counter()
    options = AnalysisOptions(threads=threads)
    discrepancies: list[str] = []
    runs: dict[str, Any] = {}

    family1 = FamilyParams(FamilyTag.ZETA_M, FAMILY1_M)
    cert = analyze_z_action(make_family(family1), options).model_dump(mode="json")
    runs["zeta_m"] = cert
    if _constant(cert) != FAMILY1_CONSTANT:
        discrepancies.append(f"zeta_m(m={FAMILY1_M}): constant term {_constant(cert)} != {FAMILY1_CONSTANT}")
    if cert["decision"] != Decision.SINGULAR_CERTIFIED.value:
        discrepancies.append(f"zeta_m(m={FAMILY1_M}): decision {cert['decision']}")

    family2 = FamilyParams(FamilyTag.SIGMA_M, FAMILY2_M)
    sigma = make_family(family2)
    for name, cert_model in (
        (ActionKind.Z.value, analyze_z_action(sigma, options)),
        (ActionKind.R_SELFSIMILAR.value, analyze_r_action(sigma, "pf", options)),
    ):
        cert = cert_model.model_dump(mode="json")
        runs[f"sigma_m/{name}"] = cert
        if _constant(cert) != FAMILY2_CONSTANT:
            discrepancies.append(f"sigma_m(m={FAMILY2_M}) {name}: constant term {_constant(cert)} != {FAMILY2_CONSTANT}")
        if cert["decision"] != Decision.SINGULAR_CERTIFIED.value:
            discrepancies.append(f"sigma_m(m={FAMILY2_M}) {name}: decision {cert['decision']}")

    family3 = FamilyParams(FamilyTag.ZETA_MAB, FAMILY3_M, FAMILY3_A, FAMILY3_B)
    k = family3.minority_count
    expected = 8 * k * k + 8 * k + 14
    cert_model = analyze_z_action(make_family(family3), AnalysisOptions(threads=threads, family=family3))
    cert = cert_model.model_dump(mode="json")
    runs["zeta_mAB"] = cert
    grid = [b for b in cert_model.supplementary_bounds if b.method.value == "majorant-grid"]
    if not grid or grid[0].constant_term != expected:
        found = grid[0].constant_term if grid else None
        discrepancies.append(f"zeta_mAB(m={FAMILY3_M}, k={k}): majorant constant term {found} != {expected}")
    if cert["decision"] != Decision.SINGULAR_CERTIFIED.value:
        discrepancies.append(f"zeta_mAB(m={FAMILY3_M}): decision {cert['decision']}")

    for line in discrepancies:
        logger.error(f"reproduction mismatch: {line}")
    report = _report("reproduce", {}, {"runs": runs}, started)
    return report.model_copy(update={"discrepancies": discrepancies})
