import asyncio
from typing import Any

from specto.cli.commands import cmd_lyapunov


async def estimate_lyapunov_exponent(
    substitution: dict[str, Any],
    n_steps: int = 200,
    samples: int = 256,
    k_max: int = 1,
    seed: int | None = None,
) -> dict[str, Any]:
    """본질 Lyapunov 지수 χ 의 Monte Carlo 추정값과 엄밀한 상한을 함께 반환합니다."""
    report = await asyncio.to_thread(cmd_lyapunov, substitution, n_steps=n_steps, samples=samples, k_max=k_max, seed=seed)
    return report.model_dump(mode="json")
