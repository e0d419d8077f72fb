from typing import Any

from pydantic import Field

from specto.serialization import ReportModel

from .const import SCHEMA_VERSION


class Report(ReportModel):
    """CLI 명령과 MCP 도구가 내보내는 공통 보고서입니다. 무한 정밀도 값은 10진 문자열로 직렬화됩니다."""

    schema_version: str = SCHEMA_VERSION
    tool_version: str
    command: str
    input: dict[str, Any]
    result: dict[str, Any]
    timing_seconds: float = 0.0
    seeds: dict[str, int] = Field(default_factory=dict)
    discrepancies: list[str] = Field(default_factory=list)
