"""Text formats for solutions and reflections (1-based labels).

Solution file::

    yber-solution v1
    n=3
    lambda=
    1 2 3
    1 2 3
    2 1 3
    rho=
    ...

Row ``a`` under ``lambda=`` lists lambda_a(1..n); row ``b`` under ``rho=``
lists rho_b(1..n).  Reflection file::

    yber-reflection v1
    n=3
    k=3 3 3

Lines starting with ``#`` are ignored by the parsers.
"""
from __future__ import annotations

import re
from pathlib import Path

from .core import FiniteSolution, PointMap
from .errors import ParseError

__all__ = [
    "SOLUTION_HEADER",
    "REFLECTION_HEADER",
    "format_solution",
    "parse_solution",
    "format_reflection",
    "parse_reflection",
    "read_solution",
    "read_reflection",
]

SOLUTION_HEADER = "yber-solution v1"
REFLECTION_HEADER = "yber-reflection v1"


def format_solution(sol: FiniteSolution) -> str:
    lines = [SOLUTION_HEADER, f"n={sol.n}", "lambda="]
    lines += [" ".join(str(v + 1) for v in row) for row in sol.lam]
    lines.append("rho=")
    lines += [" ".join(str(v + 1) for v in row) for row in sol.rho]
    return "\n".join(lines) + "\n"


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped, len(line) - len(line.lstrip())


def _expect(lines, want):
    try:
        lineno, line, indent = next(lines)
    except StopIteration:
        raise ParseError(f"unexpected end of input, expected {want!r}") from None
    if line != want:
        raise ParseError(f"expected {want!r}, got {line!r}", lineno, indent + 1)
    return lineno


def _parse_n(lines):
    try:
        lineno, line, indent = next(lines)
    except StopIteration:
        raise ParseError("unexpected end of input, expected 'n=<int>'") from None
    if not line.startswith("n="):
        raise ParseError(f"expected 'n=<int>', got {line!r}", lineno, indent + 1)
    try:
        n = int(line[2:])
    except ValueError:
        raise ParseError(f"bad size {line[2:]!r}", lineno, indent + 3) from None
    if n < 1:
        raise ParseError("n must be positive", lineno, indent + 3)
    return n


def _parse_row(lineno, line, n, offset=0):
    tokens = [(m.start() + 1 + offset, m.group()) for m in re.finditer(r"\S+", line)]
    if len(tokens) != n:
        raise ParseError(f"expected {n} entries, got {len(tokens)}", lineno, offset + 1)
    row = []
    for col, tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", lineno, col) from None
        if not 1 <= v <= n:
            raise ParseError(f"entry {v} outside 1..{n}", lineno, col)
        row.append(v - 1)
    return row


def _parse_table(lines, n):
    rows = []
    for _ in range(n):
        try:
            lineno, line, indent = next(lines)
        except StopIteration:
            raise ParseError(f"table truncated: expected {n} rows") from None
        rows.append(_parse_row(lineno, line, n, offset=indent))
    return rows


def parse_solution(text: str, name: str = "") -> FiniteSolution:
    lines = _content_lines(text)
    _expect(lines, SOLUTION_HEADER)
    n = _parse_n(lines)
    _expect(lines, "lambda=")
    lam = _parse_table(lines, n)
    _expect(lines, "rho=")
    rho = _parse_table(lines, n)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"trailing content {extra[1]!r}", extra[0], extra[2] + 1)
    return FiniteSolution(n, lam, rho, name)


def format_reflection(k: PointMap) -> str:
    return f"{REFLECTION_HEADER}\nn={k.n}\nk={' '.join(str(v) for v in k.labels())}\n"


def parse_reflection(text: str) -> PointMap:
    lines = _content_lines(text)
    _expect(lines, REFLECTION_HEADER)
    n = _parse_n(lines)
    try:
        lineno, line, indent = next(lines)
    except StopIteration:
        raise ParseError("unexpected end of input, expected 'k='") from None
    if not line.startswith("k="):
        raise ParseError(f"expected 'k=', got {line!r}", lineno, indent + 1)
    image = _parse_row(lineno, line[2:], n, offset=indent + 2)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"trailing content {extra[1]!r}", extra[0], extra[2] + 1)
    return PointMap(tuple(image))


def read_solution(path) -> FiniteSolution:
    path = Path(path)
    return parse_solution(path.read_text(), name=path.stem)


def read_reflection(path) -> PointMap:
    return parse_reflection(Path(path).read_text())
