"""Generalised derived solutions and the shelf-like operations attached to them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import FiniteSolution, PointMap, check_involutive_invertible, check_re, is_permutation
from .errors import PreconditionError, SizeError

__all__ = [
    "BinaryOp",
    "derived_solution",
    "classical_derived",
    "star_extension",
    "structure_shelf",
    "left_structure_shelf",
    "shelf_of_derived",
    "k_shelf_right",
    "k_shelf_left",
    "verify_shelf_coincidence",
    "is_self_distributive",
    "exchange_law_holds",
]

KINDS = (
    "right-shelf",
    "left-shelf",
    "k-right",
    "k-left",
    "strange",
    "harpoon-up",
    "harpoon-down",
    "plain",
)


@dataclass(frozen=True)
class BinaryOp:
    """An operation table, ``table[x][y] = x o y``, tagged with its kind."""

    n: int
    table: tuple[tuple[int, ...], ...]
    kind: str = "plain"

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        if len(table) != self.n or any(len(row) != self.n for row in table):
            raise SizeError(f"operation table must be {self.n}x{self.n}")
        if any(not 0 <= v < self.n for row in table for v in row):
            raise ValueError("operation table entry out of range")
        if self.kind not in KINDS:
            raise ValueError(f"unknown operation kind {self.kind!r}")
        object.__setattr__(self, "table", table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def same_table(self, other: BinaryOp) -> bool:
        """Compare tables of operations of the same kind; mismatched kinds raise."""
        if self.kind != other.kind:
            raise TypeError(f"comparing a {self.kind} operation with a {other.kind} one")
        return self.table == other.table

    def left_translation(self, x: int) -> tuple[int, ...]:
        return self.table[x]

    def left_inverse(self, kind="plain") -> BinaryOp:
        """The operation ``x o' y`` with ``x o (x o' y) = x o' (x o y) = y``."""
        inv = []
        for x in range(self.n):
            row = self.table[x]
            if not is_permutation(row):
                raise PreconditionError(f"left translation by {x + 1} is not bijective")
            r = [0] * self.n
            for y, z in enumerate(row):
                r[z] = y
            inv.append(r)
        return BinaryOp(self.n, inv, kind)

    def rows(self) -> list[str]:
        return [" ".join(str(v + 1) for v in row) for row in self.table]


def _table(n, f):
    return tuple(tuple(f(x, y) for y in range(n)) for x in range(n))


def _require_size(sol, k):
    if k.n != sol.n:
        raise SizeError(f"map on {k.n} points, solution on {sol.n}")


def _derive(sol: FiniteSolution, k: PointMap) -> FiniteSolution:
    lam, rho, rinv, kk, n = sol.lam, sol.rho, sol.rho_inv, k.image, sol.n
    new_lam = [[0] * n for _ in range(n)]
    new_rho = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c = rinv[kk[b]][a]
            a1 = rho[b][c]
            b1 = rho[kk[a1]][lam[c][b]]
            new_lam[a][b] = b1
            new_rho[b][a] = a1
    return FiniteSolution(n, new_lam, new_rho)


def derived_solution(sol: FiniteSolution, k: PointMap, check: bool = True) -> FiniteSolution:
    """The k-derived solution ``(a, b) -> (b', a')`` with

    ``a' = rho_b rho_{k(b)}^{-1}(a)`` and ``b' = rho_{k(a')} lambda_{rho_{k(b)}^{-1}(a)}(b)``.

    With ``check=False`` the reflection equation is not enforced, which is
    what the verifiers need to exhibit failures for non-reflections.
    """
    _require_size(sol, k)
    sol.require_rnd()
    if check and not check_re(sol, k):
        raise PreconditionError(f"{k} is not a reflection for {sol.label()}")
    out = _derive(sol, k)
    name = f"{sol.name}^({k})" if sol.name else ""
    return out.with_name(name)


def classical_derived(sol: FiniteSolution) -> FiniteSolution:
    """``(a, b) -> (rho_a lambda_{rho_b^{-1}(a)}(b), a)``."""
    sol.require_rnd()
    lam, rho, rinv = sol.lam, sol.rho, sol.rho_inv
    out = FiniteSolution.from_function(sol.n, lambda a, b: (rho[a][lam[rinv[b][a]][b]], a))
    return out.with_name(f"{sol.name}^(Id)" if sol.name else "")


def star_extension(sol: FiniteSolution) -> tuple[FiniteSolution, PointMap]:
    """Adjoin a point ``*`` (index ``n``) fixed by everything; return it with k = const *."""
    n = sol.n
    star = n
    lam = [list(row) + [star] for row in sol.lam] + [list(range(n + 1))]
    rho = [list(row) + [star] for row in sol.rho] + [list(range(n + 1))]
    ext = FiniteSolution(n + 1, lam, rho, f"{sol.name}-star" if sol.name else "")
    return ext, PointMap.constant(n + 1, star)


def structure_shelf(sol: FiniteSolution) -> BinaryOp:
    """``a <| b = rho_b lambda_{rho_a^{-1}(b)}(a)``."""
    sol.require_rnd()
    lam, rho, rinv = sol.lam, sol.rho, sol.rho_inv
    return BinaryOp(sol.n, _table(sol.n, lambda a, b: rho[b][lam[rinv[a][b]][a]]), "right-shelf")


def left_structure_shelf(sol: FiniteSolution) -> BinaryOp:
    """``b |>~ a = lambda_b rho_{lambda_a^{-1}(b)}(a)``, stored as ``table[b][a]``."""
    sol.require_lnd()
    lam, rho, linv = sol.lam, sol.rho, sol.lam_inv
    return BinaryOp(sol.n, _table(sol.n, lambda b, a: lam[b][rho[linv[a][b]][a]]), "left-shelf")


def k_shelf_right(sol: FiniteSolution, k: PointMap) -> BinaryOp:
    """``a <|_k b = rho_{k(b)} lambda_{rho_a^{-1}(b)}(a)``."""
    _require_size(sol, k)
    sol.require_rnd()
    lam, rho, rinv, kk = sol.lam, sol.rho, sol.rho_inv, k.image
    return BinaryOp(sol.n, _table(sol.n, lambda a, b: rho[kk[b]][lam[rinv[a][b]][a]]), "k-right")


def k_shelf_left(sol: FiniteSolution, k: PointMap) -> BinaryOp:
    """``b |>~_k a = lambda_b k rho_{lambda_a^{-1}(b)}(a)``, stored as ``table[b][a]``."""
    _require_size(sol, k)
    sol.require_lnd()
    lam, rho, linv, kk = sol.lam, sol.rho, sol.lam_inv, k.image
    return BinaryOp(sol.n, _table(sol.n, lambda b, a: lam[b][kk[rho[linv[a][b]][a]]]), "k-left")


def shelf_of_derived(sol: FiniteSolution, k: PointMap) -> BinaryOp:
    """Right structure shelf of the k-derived solution."""
    return structure_shelf(derived_solution(sol, k))


def is_self_distributive(op: BinaryOp) -> bool:
    t, n = op.table, op.n
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                if t[ab][c] != t[t[a][c]][t[b][c]]:
                    return False
    return True


def exchange_law_holds(sol: FiniteSolution, k: PointMap, derived: Optional[FiniteSolution] = None) -> bool:
    """``(a <|_k b) <|_k c == (a <|_k c') <|_k b'`` where ``(b', c') = r^(k)(c, b)``."""
    op = k_shelf_right(sol, k).table
    rk = derived if derived is not None else derived_solution(sol, k, check=False)
    n = sol.n
    for b in range(n):
        for c in range(n):
            b1, c1 = rk(c, b)
            for a in range(n):
                if op[op[a][b]][c] != op[op[a][c1]][b1]:
                    return False
    return True


def verify_shelf_coincidence(sol: FiniteSolution, k: PointMap) -> tuple[bool, Optional[bool]]:
    """Compare the structure shelves of r and r^(k).

    Returns ``(coincide, second)``.  ``second`` checks
    ``k(b |>~'_k a) == k(a) <| k(b)`` with ``|>~'_k`` the left structure shelf
    of r^(k); it is ``None`` (not applicable) unless k is bijective and r is
    invertible.
    """
    rk = derived_solution(sol, k)
    shelf = structure_shelf(sol)
    coincide = shelf.same_table(structure_shelf(rk))
    _, invertible, _ = check_involutive_invertible(sol)
    if not (k.is_bijective and invertible):
        return coincide, None
    if not rk.is_lnd:
        return coincide, False
    left = left_structure_shelf(rk).table
    kk, t = k.image, shelf.table
    second = all(
        kk[left[b][a]] == t[kk[a]][kk[b]] for a in range(sol.n) for b in range(sol.n)
    )
    return coincide, second
