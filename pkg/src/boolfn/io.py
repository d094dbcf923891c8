"""Reading and writing .bfn function files.

Format: `n=<decimal>` on the first non-comment line, then one line of 2^n
characters over {0, 1, -}. Lines starting with `#` and blank lines are
ignored, as are surrounding whitespace and a UTF-8 byte order mark. Entry i
of the body is input index i (big-endian, x_0 = MSB).
"""

import re
from pathlib import Path

import numpy as np
import structlog

from src.boolfn.models import Entry, PartialFunction
from src.config import settings
from src.errors import FunctionFileError, RegisterLimitError

logger = structlog.get_logger()

_HEADER = re.compile(r"n=(\d+)")


def _indent(line: str) -> int:
    return len(line) - len(line.lstrip())


def _parse_header(line: str, lineno: int) -> int:
    text = line.strip()
    offset = _indent(line)
    if not text.startswith("n="):
        raise FunctionFileError(
            lineno, offset + 1, f"expected header 'n=<decimal>', found {text!r}"
        )
    match = _HEADER.fullmatch(text)
    if not match:
        raise FunctionFileError(
            lineno, offset + 3, f"header value must be a decimal integer, found {text[2:]!r}"
        )

    n = int(match.group(1))
    if n < 1:
        raise FunctionFileError(lineno, offset + 3, "n must be at least 1")
    if n > settings.max_register_qubits:
        raise RegisterLimitError(n, settings.max_register_qubits, "function file")
    return n


def _parse_body(line: str, lineno: int, n: int) -> np.ndarray:
    # columns stay relative to the raw line
    body = line.strip()
    offset = _indent(line)
    expected = 1 << n

    for column, symbol in enumerate(body, start=offset + 1):
        if symbol not in "01-":
            raise FunctionFileError(lineno, column, f"illegal character {symbol!r} (allowed: 0, 1, -)")

    if len(body) != expected:
        column = offset + min(len(body), expected) + 1
        raise FunctionFileError(
            lineno, column, f"expected {expected} characters for n={n}, found {len(body)}"
        )

    return np.array([Entry.from_symbol(symbol) for symbol in body], dtype=np.int8)


def parse_function_file(text: str) -> PartialFunction:
    """Parse the contents of a .bfn file."""
    n: int | None = None
    entries: np.ndarray | None = None
    lines = text.removeprefix("\ufeff").split("\n")

    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue

        if n is None:
            n = _parse_header(line, lineno)
        elif entries is None:
            entries = _parse_body(line, lineno, n)
        else:
            raise FunctionFileError(lineno, 1, "unexpected content after the function body")

    if n is None:
        raise FunctionFileError(1, 1, "missing header 'n=<decimal>'")
    if entries is None:
        raise FunctionFileError(len(lines), 1, "missing function body")

    return PartialFunction(n=n, entries=entries)


def write_function_file(partial: PartialFunction) -> str:
    """Serialize a partial function in .bfn format."""
    return f"n={partial.n}\n{partial.symbols()}\n"


def read_function_file(path: str | Path) -> PartialFunction:
    partial = parse_function_file(Path(path).read_text(encoding="utf-8-sig"))
    logger.info(
        "function_file_loaded",
        path=str(path),
        n=partial.n,
        n0_prime=partial.n0_prime,
        n1_prime=partial.n1_prime,
        d=partial.d,
    )
    return partial


def save_function_file(partial: PartialFunction, path: str | Path) -> None:
    Path(path).write_text(write_function_file(partial), encoding="utf-8")
