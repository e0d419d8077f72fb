import logging
import os

from specto.settings.config import Settings

logger = logging.getLogger(__name__)


def configure_logging(level: str | None = None) -> None:
    """
    CLI / MCP 진입점에서 한 번 호출되어 루트 로거를 설정합니다.

    Args:
        level (str | None): 로그 레벨 이름. 없으면 SPECTO_LOG_LEVEL 설정값을 사용합니다.
    """
    level_name = (level or Settings.SPECTO_LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logger.debug(f"Logging configured at level {level_name}")


def resolve_threads(requested: int | None = None) -> int:
    """
    작업 스레드 수를 결정합니다. 환경 변수 SPECTO_THREADS가 --threads 값보다 우선합니다.

    Args:
        requested (int | None): CLI에서 전달된 스레드 수.

    Returns:
        int: 1 이상의 스레드 수.
    """
    if Settings.SPECTO_THREADS is not None:
        threads = Settings.SPECTO_THREADS
    elif requested is not None:
        threads = requested
    else:
        threads = os.cpu_count() or 1
    return max(1, int(threads))
