"""Finite set-theoretic solutions, point maps and the basic predicates.

Elements are stored 0-based (``0..n-1``).  Everything that reads or prints
labels (``PointMap.parse``, ``str()``, the file formats) uses 1-based labels.

A solution is stored as two tables::

    lam[a][b] = lambda_a(b)        rho[b][a] = rho_b(a)

so that ``r(a, b) = (lam[a][b], rho[b][a])``.  Tables are not required to
satisfy the Yang-Baxter equation; the predicates below decide that.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator, Optional, Sequence

from .errors import PreconditionError, RangeError, ResourceError, SizeError

__all__ = [
    "PointMap",
    "FiniteSolution",
    "PredicateReport",
    "apply_r",
    "apply_at",
    "apply_k_last",
    "check_ybe",
    "check_ybe_direct",
    "check_re",
    "check_degeneracy",
    "check_involutive_invertible",
    "power_pair",
    "predicate_report",
    "solutions_isomorphic",
    "all_maps",
    "is_permutation",
    "invert",
]


def is_permutation(image: Sequence[int]) -> bool:
    return sorted(image) == list(range(len(image)))


def invert(image: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(image)
    for i, x in enumerate(image):
        inv[x] = i
    return tuple(inv)


def _check_range(n, values, what):
    for v in values:
        if not (isinstance(v, int) and 0 <= v < n):
            raise RangeError(f"{what}: entry {v!r} outside 0..{n - 1}")


def _parse_labels(text: str) -> list[int]:
    text = text.strip()
    if not text:
        raise ValueError("empty label string")
    if any(sep in text for sep in " ,"):
        return [int(tok) for tok in text.replace(",", " ").split()]
    # compact form "113": one digit per element
    return [int(ch) for ch in text]


@dataclass(frozen=True)
class PointMap:
    """A map X -> X given by its image vector (0-based)."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if not self.image:
            raise RangeError("a point map needs n >= 1")
        _check_range(len(self.image), self.image, "PointMap")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> PointMap:
        return cls(tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int) -> PointMap:
        return cls((value,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> PointMap:
        n = len(labels)
        for v in labels:
            if not 1 <= v <= n:
                raise RangeError(f"label {v} outside 1..{n}")
        return cls(tuple(v - 1 for v in labels))

    @classmethod
    def parse(cls, text: str) -> PointMap:
        """Parse ``"113"`` or ``"1 1 3"`` (1-based labels)."""
        return cls.from_labels(_parse_labels(text))

    def __call__(self, a: int) -> int:
        return self.image[a]

    @cached_property
    def is_bijective(self) -> bool:
        return is_permutation(self.image)

    def labels(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.image)

    def compose(self, other: PointMap) -> PointMap:
        """``self o other`` (``other`` acts first)."""
        if other.n != self.n:
            raise SizeError("cannot compose maps on sets of different sizes")
        return PointMap(tuple(self.image[x] for x in other.image))

    def inverse(self) -> PointMap:
        if not self.is_bijective:
            raise PreconditionError(f"{self} is not bijective")
        return PointMap(invert(self.image))

    def __str__(self):
        if self.n <= 9:
            return "".join(str(v) for v in self.labels())
        return " ".join(str(v) for v in self.labels())

    def __repr__(self):
        return f"PointMap({str(self)!r})"

    def __lt__(self, other):
        return self.image < other.image


def all_maps(n: int) -> Iterator[PointMap]:
    """All n**n maps X -> X in lexicographic order of image vectors."""
    for image in itertools.product(range(n), repeat=n):
        yield PointMap(image)


@dataclass(frozen=True)
class FiniteSolution:
    """A candidate map r(a,b) = (lambda_a(b), rho_b(a)) on {0..n-1}."""

    n: int
    lam: tuple[tuple[int, ...], ...]
    rho: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise RangeError(f"n must be a positive integer, got {self.n!r}")
        lam = tuple(tuple(row) for row in self.lam)
        rho = tuple(tuple(row) for row in self.rho)
        for tab, what in ((lam, "lambda"), (rho, "rho")):
            if len(tab) != self.n or any(len(row) != self.n for row in tab):
                raise SizeError(f"{what} table must be {self.n}x{self.n}")
            for row in tab:
                _check_range(self.n, row, what)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "rho", rho)

    @classmethod
    def from_function(cls, n: int, r: Callable[[int, int], tuple[int, int]], name="") -> FiniteSolution:
        lam = [[0] * n for _ in range(n)]
        rho = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                x, y = r(a, b)
                lam[a][b] = x
                rho[b][a] = y
        return cls(n, lam, rho, name)

    @classmethod
    def from_maps(cls, lambdas: Sequence[Sequence[int]], rhos: Sequence[Sequence[int]], name="") -> FiniteSolution:
        """Build from 1-based image vectors: ``lambdas[a-1]`` is the image of lambda_a."""
        n = len(lambdas)
        lam = [[v - 1 for v in row] for row in lambdas]
        rho = [[v - 1 for v in row] for row in rhos]
        for tab in (lam, rho):
            for row in tab:
                for v in row:
                    if not 0 <= v < n:
                        raise RangeError(f"label {v + 1} outside 1..{n}")
        return cls(n, lam, rho, name)

    @classmethod
    def flip(cls, n: int) -> FiniteSolution:
        ident = tuple(range(n))
        return cls(n, (ident,) * n, (ident,) * n, f"flip{n}")

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return self.lam[a][b], self.rho[b][a]

    def with_name(self, name: str) -> FiniteSolution:
        return FiniteSolution(self.n, self.lam, self.rho, name)

    @cached_property
    def rho_inv(self) -> tuple[tuple[int, ...], ...]:
        if not all(is_permutation(row) for row in self.rho):
            raise PreconditionError("solution is not right non-degenerate")
        return tuple(invert(row) for row in self.rho)

    @cached_property
    def lam_inv(self) -> tuple[tuple[int, ...], ...]:
        if not all(is_permutation(row) for row in self.lam):
            raise PreconditionError("solution is not left non-degenerate")
        return tuple(invert(row) for row in self.lam)

    @cached_property
    def is_rnd(self) -> bool:
        return all(is_permutation(row) for row in self.rho)

    @cached_property
    def is_lnd(self) -> bool:
        return all(is_permutation(row) for row in self.lam)

    def require_rnd(self):
        if not self.is_rnd:
            raise PreconditionError(f"{self.label()} is not right non-degenerate")

    def require_lnd(self):
        if not self.is_lnd:
            raise PreconditionError(f"{self.label()} is not left non-degenerate")

    def label(self) -> str:
        return self.name or f"solution(n={self.n})"

    def __repr__(self):
        return f"FiniteSolution(n={self.n}, name={self.name!r})"


def _check_element(sol, a):
    if not (isinstance(a, int) and 0 <= a < sol.n):
        raise RangeError(f"element {a!r} outside 0..{sol.n - 1}")


def apply_r(sol: FiniteSolution, a: int, b: int) -> tuple[int, int]:
    _check_element(sol, a)
    _check_element(sol, b)
    return sol.lam[a][b], sol.rho[b][a]


def apply_at(sol: FiniteSolution, word: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Apply r at positions ``i, i+1`` of ``word`` (0-based ``i``)."""
    a, b = word[i], word[i + 1]
    return word[:i] + (sol.lam[a][b], sol.rho[b][a]) + word[i + 2:]


def apply_k_last(k: PointMap, word: tuple[int, ...]) -> tuple[int, ...]:
    return word[:-1] + (k.image[word[-1]],)


def check_ybe(sol: FiniteSolution) -> bool:
    """Componentwise YBE check over all n**3 triples."""
    lam, rho, n = sol.lam, sol.rho, sol.n
    for a in range(n):
        for b in range(n):
            lab, rba = lam[a][b], rho[b][a]
            for c in range(n):
                lbc, rcb = lam[b][c], rho[c][b]
                if lam[lab][lam[rba][c]] != lam[a][lbc]:
                    return False
                if rho[c][rba] != rho[rcb][rho[lbc][a]]:
                    return False
                if rho[lam[rba][c]][lab] != lam[rho[lbc][a]][rcb]:
                    return False
    return True


def check_ybe_direct(sol: FiniteSolution) -> bool:
    """YBE via composing r on words; independent of the component formulas."""
    for w in itertools.product(range(sol.n), repeat=3):
        left = apply_at(sol, apply_at(sol, apply_at(sol, w, 0), 1), 0)
        right = apply_at(sol, apply_at(sol, apply_at(sol, w, 1), 0), 1)
        if left != right:
            return False
    return True


def _re_sides(sol, k, a, b):
    lam, rho, kk = sol.lam, sol.rho, k.image
    # r k2 r k2 (a, b)
    b1 = kk[b]
    x, y = lam[a][b1], rho[b1][a]
    y = kk[y]
    left = (lam[x][y], rho[y][x])
    # k2 r k2 r (a, b)
    x, y = lam[a][b], rho[b][a]
    y = kk[y]
    x, y = lam[x][y], rho[y][x]
    right = (x, kk[y])
    return left, right


def check_re(sol: FiniteSolution, k: PointMap) -> bool:
    if k.n != sol.n:
        raise SizeError(f"reflection on {k.n} points, solution on {sol.n}")
    for a in range(sol.n):
        for b in range(sol.n):
            left, right = _re_sides(sol, k, a, b)
            if left != right:
                return False
    return True


def check_degeneracy(sol: FiniteSolution) -> tuple[bool, bool]:
    """Return ``(rnd, lnd)``."""
    return sol.is_rnd, sol.is_lnd


def _pair_map(sol):
    n = sol.n
    return [sol.lam[p // n][p % n] * n + sol.rho[p % n][p // n] for p in range(n * n)]


def power_pair(sol: FiniteSolution) -> tuple[int, int]:
    """Minimal ``(s, t)``, ``s > t >= 0``, with ``r**s == r**t``.

    ``t`` is the longest tail before a point of X^2 enters its cycle and
    ``s - t`` the lcm of the cycle lengths.
    """
    f = _pair_map(sol)
    tail = 0
    period = 1
    lengths = set()
    for start in range(len(f)):
        seen = {}
        x, step = start, 0
        while x not in seen:
            seen[x] = step
            x = f[x]
            step += 1
        tail = max(tail, seen[x])
        length = step - seen[x]
        if length not in lengths:
            lengths.add(length)
            period = math.lcm(period, length)
    return tail + period, tail


def check_involutive_invertible(sol: FiniteSolution) -> tuple[bool, bool, tuple[int, int]]:
    f = _pair_map(sol)
    involutive = all(f[f[p]] == p for p in range(len(f)))
    invertible = len(set(f)) == len(f)
    return involutive, invertible, power_pair(sol)


@dataclass(frozen=True)
class PredicateReport:
    ybe: bool
    rnd: bool
    lnd: bool
    involutive: bool
    invertible: bool
    power_pair: Optional[tuple[int, int]]

    @property
    def meaningful(self) -> bool:
        """The remaining fields only describe a solution when ``ybe`` holds."""
        return self.ybe

    def lines(self) -> list[str]:
        def b(v):
            return "true" if v else "false"

        out = [
            f"ybe={b(self.ybe)}",
            f"rnd={b(self.rnd)}",
            f"lnd={b(self.lnd)}",
            f"involutive={b(self.involutive)}",
            f"invertible={b(self.invertible)}",
        ]
        if self.power_pair is not None:
            out.append(f"power_pair={self.power_pair[0]},{self.power_pair[1]}")
        if not self.ybe:
            out.append("note=not a YBE solution; other fields describe the candidate map only")
        return out


def predicate_report(sol: FiniteSolution) -> PredicateReport:
    ybe = check_ybe(sol)
    rnd, lnd = check_degeneracy(sol)
    involutive, invertible, pp = check_involutive_invertible(sol)
    return PredicateReport(ybe, rnd, lnd, involutive, invertible, pp)


def _conjugates(s1, s2, sigma):
    lam1, rho1, lam2, rho2 = s1.lam, s1.rho, s2.lam, s2.rho
    n = s1.n
    for a in range(n):
        sa = sigma[a]
        for b in range(n):
            sb = sigma[b]
            if sigma[lam1[a][b]] != lam2[sa][sb] or sigma[rho1[b][a]] != rho2[sb][sa]:
                return False
    return True


def solutions_isomorphic(s1: FiniteSolution, s2: FiniteSolution) -> Optional[PointMap]:
    """First permutation sigma (lexicographically) with (sigma x sigma) r1 = r2 (sigma x sigma)."""
    if s1.n != s2.n:
        raise SizeError(f"solutions on {s1.n} and {s2.n} points")
    if s1.n > 8:
        raise ResourceError("brute-force isomorphism search is limited to n <= 8")
    for sigma in itertools.permutations(range(s1.n)):
        if _conjugates(s1, s2, sigma):
            return PointMap(sigma)
    return None
