import asyncio
from typing import Any

from specto.cli.commands import cmd_bound


async def compute_bound(
    substitution: dict[str, Any],
    k: int = 1,
    method: str = "auto",
    samples: int = 4096,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    χ 상한 하나를 계산합니다.

    Args:
        substitution (dict[str, Any]): 치환 JSON 또는 족 축약.
        k (int): 거듭제곱.
        method (str): "auto", "jensen", "cleared", "majorant", "monte-carlo".

    Returns:
        dict[str, Any]: Report JSON (bound 는 상수항을 10진 문자열로 포함).
    """
    report = await asyncio.to_thread(cmd_bound, substitution, k=k, method=method, samples=samples, seed=seed)
    return report.model_dump(mode="json")
