import asyncio
from typing import Any

from specto.cli.commands import cmd_reproduce


async def reproduce_examples() -> dict[str, Any]:
    """세 내장 족의 기준 상수항 (40, 16, 8k²+8k+14) 과 판정을 재현합니다. 불일치는 discrepancies 에 담깁니다."""
    report = await asyncio.to_thread(cmd_reproduce)
    return report.model_dump(mode="json")
