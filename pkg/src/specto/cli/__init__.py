from .commands import cmd_analyze, cmd_bound, cmd_lyapunov, cmd_orbit, cmd_reproduce, cmd_ud_check
from .const import ExitCode
from .module import build_parser, main, render_text
from .schema import Report

__all__ = [
    "ExitCode",
    "Report",
    "build_parser",
    "cmd_analyze",
    "cmd_bound",
    "cmd_lyapunov",
    "cmd_orbit",
    "cmd_reproduce",
    "cmd_ud_check",
    "main",
    "render_text",
]
