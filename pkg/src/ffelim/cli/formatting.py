"""Report rendering for the command line."""

import json
from typing import Any, Dict, Optional

from ..count.pipeline import SCHEMA_VERSION
from ..errors import InputError
from ..types import OutputFormat
from .handlers import CommandResult


def format_json(payload: Dict[str, Any]) -> str:
    """Stable JSON: sorted keys, two-space indent, schema stamped."""
    return json.dumps({**payload, "schema": SCHEMA_VERSION}, indent=2, sort_keys=True) + "\n"


def format_text(text: str) -> str:
    return text if text.endswith("\n") else text + "\n"


def render(result: CommandResult, fmt: Optional[OutputFormat] = None) -> str:
    """Render a command result in the requested format, or its default one.

    Raises:
        InputError: If the command has no CSV form
    """
    fmt = OutputFormat(fmt) if fmt is not None else result.default_format
    if fmt == OutputFormat.JSON:
        return format_json(result.payload)
    if fmt == OutputFormat.CSV:
        if result.csv is None:
            raise InputError(f"{result.payload.get('command')} has no CSV output")
        return result.csv
    return format_text(result.text)


def format_error_message(error: Exception) -> str:
    """One-line message for standard error."""
    return f"ffelim: {type(error).__name__}: {error}"
