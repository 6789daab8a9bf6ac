"""Built-in solutions.

Names accepted by :func:`get`:

``flip<n>``
    the trivial solution r(a, b) = (b, a) on n points
``ex14``
    3 points, lambda_3 = rho_3 = (12), all other components trivial
``ex15``
    4 points, lambda_a = (132), rho_1 = (13), rho_2 = (12), rho_3 = (23), rho_4 = (123)
``perm<n>:<cycles>``
    permutation solution r(a, b) = (f(b), f^{-1}(a)), f in disjoint cycle notation,
    e.g. ``perm3:(132)``; the identity is ``()``
``ex14-star``
    ``ex14`` with an extra point fixed by all components
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FiniteSolution, check_ybe, invert
from .derive import star_extension
from .errors import ParseError

__all__ = ["CatalogEntry", "get", "standard_names", "parse_cycles", "permutation_solution", "describe"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    solution: FiniteSolution
    description: str


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Parse disjoint cycle notation with 1-based labels into a 0-based image vector."""
    text = text.strip()
    if not re.fullmatch(r"(\([0-9 ,]*\))+", text):
        raise ParseError(f"bad cycle notation {text!r}")
    image = list(range(n))
    used = set()
    for body in re.findall(r"\(([0-9 ,]*)\)", text):
        body = body.strip()
        if not body:
            continue
        if " " in body or "," in body:
            labels = [int(t) for t in body.replace(",", " ").split()]
        else:
            labels = [int(ch) for ch in body]
        for v in labels:
            if not 1 <= v <= n:
                raise ParseError(f"cycle entry {v} outside 1..{n}")
            if v in used:
                raise ParseError(f"cycles are not disjoint: {v} repeated")
            used.add(v)
        for i, v in enumerate(labels):
            image[v - 1] = labels[(i + 1) % len(labels)] - 1
    return tuple(image)


def permutation_solution(f: tuple[int, ...], name="") -> FiniteSolution:
    n = len(f)
    finv = invert(f)
    return FiniteSolution(n, (tuple(f),) * n, (finv,) * n, name)


def _cyc(text, n):
    return [v + 1 for v in parse_cycles(text, n)]


def _ex14():
    ident = [1, 2, 3]
    swap = _cyc("(12)", 3)
    return FiniteSolution.from_maps([ident, ident, swap], [ident, ident, swap], "ex14")


def _ex15():
    lam = [_cyc("(132)", 4)] * 4
    rho = [_cyc("(13)", 4), _cyc("(12)", 4), _cyc("(23)", 4), _cyc("(123)", 4)]
    return FiniteSolution.from_maps(lam, rho, "ex15")


_DESCRIPTIONS = {
    "ex14": "involutive non-degenerate solution on 3 points, lambda_3 = rho_3 = (12)",
    "ex15": "non-involutive solution on 4 points with eleven reflections",
    "ex14-star": "ex14 extended by a point fixed by all components",
}


def get(name: str) -> FiniteSolution:
    """Look up a catalog solution by name; raises ``KeyError`` for unknown names."""
    sol = _build(name)
    if not check_ybe(sol):
        raise AssertionError(f"catalog entry {name} fails the YBE")
    return sol


def _build(name):
    if name == "ex14":
        return _ex14()
    if name == "ex15":
        return _ex15()
    if name == "ex14-star":
        ext, _ = star_extension(_ex14())
        return ext.with_name("ex14-star")
    m = re.fullmatch(r"flip(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return FiniteSolution.flip(int(m.group(1)))
    m = re.fullmatch(r"perm(\d+):(.*)", name)
    if m and int(m.group(1)) >= 1:
        n = int(m.group(1))
        return permutation_solution(parse_cycles(m.group(2), n), name)
    raise KeyError(name)


def describe(name: str) -> str:
    if name in _DESCRIPTIONS:
        return _DESCRIPTIONS[name]
    if name.startswith("flip"):
        return "trivial solution r(a,b) = (b,a)"
    if name.startswith("perm"):
        return "permutation solution r(a,b) = (f(b), f^-1(a))"
    raise KeyError(name)


def standard_names() -> list[str]:
    """The fixed corpus used by the exhaustive property and acceptance checks."""
    return [
        "flip2",
        "flip3",
        "ex14",
        "ex15",
        "ex14-star",
        "perm2:(12)",
        "perm3:(123)",
        "perm3:(12)",
    ]


def entries() -> list[CatalogEntry]:
    return [CatalogEntry(name, get(name), describe(name)) for name in standard_names()]
