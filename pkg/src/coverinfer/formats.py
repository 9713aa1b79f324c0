"""Plain-text string and array files.

String files hold one line of letters a-z. Array files hold one array per
line as space-separated decimals, position 1 first. In both, lines starting
with ``#`` are comments.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .core import check_text


class FormatError(ValueError):
    pass


def _content_lines(stream: TextIO) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if line.startswith("#") or not line.strip():
            continue
        out.append((lineno, line))
    return out


def read_text(stream: TextIO) -> str:
    lines = _content_lines(stream)
    if not lines:
        return ""
    if len(lines) > 1:
        raise FormatError(f"line {lines[1][0]}: expected a single line of text")
    lineno, line = lines[0]
    try:
        return check_text(line.strip())
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def parse_array(line: str) -> list[int]:
    fields = line.split()
    for f in fields:
        if not f.isdigit():
            raise FormatError(f"malformed array entry {f!r}")
    return [int(f) for f in fields]


def read_arrays(stream: TextIO) -> list[list[int]]:
    arrays = []
    for lineno, line in _content_lines(stream):
        try:
            arrays.append(parse_array(line.strip()))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    return arrays


def format_array(values: Iterable[int]) -> str:
    return " ".join(map(str, values))
