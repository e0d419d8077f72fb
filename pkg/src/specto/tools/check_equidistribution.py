import asyncio
from typing import Any

from specto.cli.commands import cmd_ud_check


async def check_equidistribution(
    matrix: list[list[int | str]],
    vector: list[int | str],
    empirical: bool = False,
    n_steps: int = 10_000,
    h_max: int = 3,
    omegas: int = 10,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    (Aⁿωv) mod 1 의 균등분포 조건을 판정하고, 필요하면 Weyl 합 실험 결과를 덧붙입니다.

    Args:
        matrix (list[list[int | str]]): 정수 행렬 A (행 단위).
        vector (list[int | str]): 유리수 벡터 v ("1/2" 형식 허용).
        empirical (bool): Weyl 합 실험 실행 여부.

    Returns:
        dict[str, Any]: Report JSON (verdict, empirical).
    """
    report = await asyncio.to_thread(
        cmd_ud_check, matrix, vector, empirical=empirical, n_steps=n_steps, h_max=h_max, omegas=omegas, seed=seed
    )
    return report.model_dump(mode="json")
