from typing import Any

from fastmcp import FastMCP

from specto.settings import configure_logging
from specto.tools import (
    analyze_substitution,
    check_equidistribution,
    compute_bound,
    estimate_lyapunov_exponent,
    reproduce_examples,
)

mcp = FastMCP(
    "SPECTO:SUBSTITUTION SPECTRAL ANALYZER",
    instructions="""
    이 서버는 치환 동역학계의 순수 특이 스펙트럼 판정, 균등분포 조건 판정, Lyapunov 지수 추정을 제공합니다.
    SINGULAR_CERTIFIED 만 증명에 해당하며, SINGULAR_NUMERICAL 은 수치적 근거임을 반드시 구분하여 설명해주세요.
    """,
)

configure_logging()


@mcp.tool()
async def analyze(
    substitution: dict[str, Any],
    actions: list[str] | None = None,
    vector: str | None = None,
    k_max: int = 1,
    numerical: bool = False,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    치환의 Z-작용 또는 R-작용이 순수 특이 스펙트럼을 갖는지 판정합니다.

    Args:
        substitution (dict[str, Any]): {"alphabet_size": 3, "rules": ["0001", "1102", "0122"]}
            또는 족 축약 {"family": "zeta_m", "m": 20}, {"family": "sigma_m", "m": 8},
            {"family": "zeta_mAB", "m": 30, "A": "0...01", "B": "1...1"}.
        actions (list[str] | None): "z", "r-selfsimilar", "r-vector". 기본값은 ["z"].
        vector (str | None): r-vector 작용에 사용할 양의 유리수 벡터 (예: "1,1,1").
        k_max (int): 상한 계산에 사용할 최대 거듭제곱.
        numerical (bool): Monte Carlo 근거 사용 여부.
        seed (int | None): 난수 seed.

    Returns:
        dict[str, Any]: 판정서 목록을 담은 보고서.
    """
    return await analyze_substitution(substitution, actions=actions, vector=vector, k_max=k_max, numerical=numerical, seed=seed)


@mcp.tool()
async def ud_check(
    matrix: list[list[int | str]],
    vector: list[int | str],
    empirical: bool = False,
    n_steps: int = 10_000,
    h_max: int = 3,
    omegas: int = 10,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    정수 행렬 A 와 유리수 벡터 v 에 대해 (Aⁿωv) mod 1 이 거의 모든 ω 에서 균등분포하는지 판정합니다.
    실패하는 경우 원인 (singular, dependent_iterates, degenerate, unit_root_eigenvalue) 과 정수 증거 h 를 반환합니다.
    """
    return await check_equidistribution(matrix, vector, empirical=empirical, n_steps=n_steps, h_max=h_max, omegas=omegas, seed=seed)


@mcp.tool()
async def lyapunov(
    substitution: dict[str, Any],
    n_steps: int = 200,
    samples: int = 256,
    k_max: int = 1,
    seed: int | None = None,
) -> dict[str, Any]:
    """본질 스펙트럼 코사이클의 Lyapunov 지수를 Monte Carlo 로 추정하고 엄밀한 상한과 비교합니다."""
    return await estimate_lyapunov_exponent(substitution, n_steps=n_steps, samples=samples, k_max=k_max, seed=seed)


@mcp.tool()
async def bound(
    substitution: dict[str, Any],
    k: int = 1,
    method: str = "auto",
    samples: int = 4096,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    본질 Lyapunov 지수의 상한을 계산합니다.

    Args:
        method (str): "auto", "jensen", "cleared", "majorant" (zeta_mAB 족), "monte-carlo".
    """
    return await compute_bound(substitution, k=k, method=method, samples=samples, seed=seed)


@mcp.tool()
async def reproduce() -> dict[str, Any]:
    """내장 세 족의 기준값 (상수항 40, 16, 8k²+8k+14) 과 판정을 재현합니다."""
    return await reproduce_examples()


if __name__ == "__main__":
    mcp.run(transport="stdio")
