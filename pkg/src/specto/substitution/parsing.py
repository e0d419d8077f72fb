import json
import logging
from pathlib import Path
from typing import Any

from specto.errors import InputError

from .const import FamilyTag
from .module import make_family
from .schema import FamilyParams, Substitution

logger = logging.getLogger(__name__)


def parse_substitution(data: dict[str, Any] | str | Path) -> tuple[Substitution, FamilyParams | None]:
    """
    치환 JSON 또는 족 축약 JSON을 해석합니다.

    허용 형식:
        {"alphabet_size": d, "rules": [[0, 1], [0]]}
        {"alphabet_size": 3, "rules": ["00012", "11111102", "0122"]}
        {"family": "zeta_m", "m": 20}
        {"family": "zeta_mAB", "m": 30, "A": "0...01", "B": "1...1"}

    Args:
        data: 이미 읽은 dict, JSON 문자열, 또는 JSON 파일 경로.

    Returns:
        tuple[Substitution, FamilyParams | None]: 치환과 (족 입력이면) 족 매개변수.
    """
    if isinstance(data, Path):
        data = data.read_text(encoding="utf-8")
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            logger.error(f"substitution input is not valid JSON: {e}")
            raise InputError(f"malformed substitution JSON: {e}") from e
    if not isinstance(data, dict):
        raise InputError("substitution input must be a JSON object")

    if "family" in data:
        try:
            family = FamilyTag(data["family"])
        except ValueError as e:
            raise InputError(f"unknown family {data['family']!r}; expected one of {[f.value for f in FamilyTag]}") from e
        if "m" not in data:
            raise InputError("family shorthand requires m")
        params = FamilyParams(family=family, m=int(data["m"]), A=data.get("A"), B=data.get("B"))
        return make_family(params), params

    if "rules" not in data:
        raise InputError("substitution input needs either 'family' or 'rules'")
    rules = data["rules"]
    alphabet_size = int(data.get("alphabet_size", len(rules)))
    return Substitution.of(alphabet_size, rules), None
