"""Rendering triangles as text, with optional colour and clipboard copy."""

import csv
import io
import json
import logging
from enum import Enum
from typing import Iterable, Sequence

try:
    import pyperclip
    HAS_PYPERCLIP = True
except ImportError:
    HAS_PYPERCLIP = False

from pygments import highlight
from pygments.formatters import TerminalFormatter
from pygments.lexers import JsonLexer

logger = logging.getLogger(__name__)


class OutputFormat(Enum):
    """Text formats for emitted triangles."""
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


def render_rows(rows: Iterable[Sequence[int]], fmt: OutputFormat) -> str:
    """Render rows; every format ends with a single newline."""
    rows = [list(row) for row in rows]
    if fmt is OutputFormat.PLAIN:
        return "".join(" ".join(str(value) for value in row) + "\n" for row in rows)
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(rows)
        return buffer.getvalue()
    # decimal strings: entries outgrow double precision
    return json.dumps([[str(value) for value in row] for row in rows]) + "\n"


def colorize(text: str, fmt: OutputFormat) -> str:
    """Terminal colouring for JSON output; other formats pass through."""
    if fmt is not OutputFormat.JSON:
        return text
    return highlight(text, JsonLexer(), TerminalFormatter())


def copy_to_clipboard(text: str) -> bool:
    """Copy text to the system clipboard if pyperclip can reach one."""
    if not HAS_PYPERCLIP:
        logger.warning("pyperclip is not installed; --copy ignored")
        return False
    try:
        pyperclip.copy(text)
    except pyperclip.PyperclipException as e:
        logger.warning("clipboard unavailable: %s", e)
        return False
    return True
