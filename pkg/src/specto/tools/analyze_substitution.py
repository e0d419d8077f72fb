"""
### 설계 방향 및 원칙
- **핵심 책임**: 치환의 Z-작용 / R-작용 특이 스펙트럼 판정을 MCP 도구로 제공합니다.
- **기술적 고려사항**:
    - 계산은 CPU 작업이므로 `asyncio.to_thread` 로 이벤트 루프 밖에서 실행합니다.
    - 결과는 CLI `analyze` 와 같은 JSON 입니다.
"""

import asyncio
from typing import Any

from specto.cli.commands import cmd_analyze


async def analyze_substitution(
    substitution: dict[str, Any],
    actions: list[str] | None = None,
    vector: str | None = None,
    k_max: int = 1,
    numerical: bool = False,
    seed: int | None = None,
) -> dict[str, Any]:
    """
    치환 작용의 순수 특이 스펙트럼 여부를 판정합니다.

    Args:
        substitution (dict[str, Any]): {"alphabet_size": d, "rules": [...]} 또는 {"family": "zeta_m", "m": 20}.
        actions (list[str] | None): "z", "r-selfsimilar", "r-vector" 중 실행할 작용. 기본값은 ["z"].
        vector (str | None): r-vector 작용의 양의 유리수 벡터 ("1,1,1").
        k_max (int): 상한 계산에 사용할 최대 거듭제곱.
        numerical (bool): Monte Carlo 근거에 의한 SINGULAR_NUMERICAL 판정 허용 여부.
        seed (int | None): 난수 seed.

    Returns:
        dict[str, Any]: Report JSON.
    """
    report = await asyncio.to_thread(
        cmd_analyze, substitution, actions=actions, vector=vector, k_max=k_max, numerical=numerical, seed=seed
    )
    return report.model_dump(mode="json")
