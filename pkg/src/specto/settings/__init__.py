from .config import Settings
from .startup import configure_logging, resolve_threads

__all__ = ["Settings", "configure_logging", "resolve_threads"]
