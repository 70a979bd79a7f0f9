"""Command-line surface."""

from .app import build_run_config, create_parser, run_command
from .handlers import CommandResult, RunConfig, dispatch

__all__ = [
    "CommandResult",
    "RunConfig",
    "build_run_config",
    "create_parser",
    "dispatch",
    "run_command",
]
