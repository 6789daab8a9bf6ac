"""k-Garside maps, k-guitar maps and the word-level extension of r.

Operator products are read right to left: in ``k_n r_{n-1} k_n`` the
rightmost ``k_n`` acts first.  Words are tuples of 0-based elements.
Conventions below degree 2: ``garside_map`` is the identity on the empty
word and ``k`` on a single letter; ``guitar_map`` is the identity on words
of length 0 and 1.
"""
from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .core import FiniteSolution, PointMap, apply_at, apply_k_last
from .derive import derived_solution
from .errors import SizeError

__all__ = [
    "garside_map",
    "guitar_map",
    "guitar_inverse",
    "rho_word",
    "word_lambda",
    "word_rho",
    "find_entwining_failure",
    "verify_entwining",
    "find_product_failure",
    "verify_product_formulas",
]

Word = tuple


def _words(n, d):
    return itertools.product(range(n), repeat=d)


def garside_map(sol: FiniteSolution, k: PointMap, w: Sequence[int]) -> Word:
    w = tuple(w)
    m = len(w)
    if m == 0:
        return w
    w = apply_k_last(k, w)
    for j in range(1, m):
        # r_{m-j} ... r_{m-1}, then k on the last strand
        for i in range(m - j - 1, m - 1):
            w = apply_at(sol, w, i)
        w = apply_k_last(k, w)
    return w


def rho_word(sol: FiniteSolution, b: Sequence[int], x: int) -> int:
    """rho_{(b_1..b_m)}(x) = rho_{b_m} ... rho_{b_1}(x)."""
    rho = sol.rho
    for c in b:
        x = rho[c][x]
    return x


def _rho_word_inv(sol, b, x):
    rinv = sol.rho_inv
    for c in reversed(b):
        x = rinv[c][x]
    return x


def _guitar(sol, k, w):
    w = tuple(w)
    m = len(w)
    out = [0] * m
    for i in range(m - 1):
        out[i] = rho_word(sol, garside_map(sol, k, w[i + 1:]), w[i])
    if m:
        out[-1] = w[-1]
    return tuple(out)


def guitar_map(sol: FiniteSolution, k: PointMap, w: Sequence[int]) -> Word:
    """J(a_1..a_m): the i-th letter is rho over the Garside image of the suffix after a_i."""
    sol.require_rnd()
    return _guitar(sol, k, w)


def guitar_inverse(sol: FiniteSolution, k: PointMap, w: Sequence[int]) -> Word:
    sol.require_rnd()
    w = tuple(w)
    m = len(w)
    if m == 0:
        return w
    out = [0] * m
    out[-1] = w[-1]
    for i in range(m - 2, -1, -1):
        suffix = garside_map(sol, k, out[i + 1:])
        out[i] = _rho_word_inv(sol, suffix, w[i])
    return tuple(out)


def _cross_blocks(sol, u, v):
    """Slide block v leftwards through block u; return (lambda_u(v), rho_v(u))."""
    w = tuple(u) + tuple(v)
    p = len(u)
    for j in range(len(v)):
        for i in range(p + j - 1, j - 1, -1):
            w = apply_at(sol, w, i)
    return w[:len(v)], w[len(v):]


def word_lambda(sol: FiniteSolution, u: Sequence[int], v: Sequence[int]) -> Word:
    return _cross_blocks(sol, u, v)[0]


def word_rho(sol: FiniteSolution, u: Sequence[int], v: Sequence[int]) -> Word:
    """rho_v(u), a word of the same length as u."""
    return _cross_blocks(sol, u, v)[1]


def find_entwining_failure(sol: FiniteSolution, k: PointMap, d: int) -> Optional[tuple]:
    """First violation of the entwining relations in degree d, or None.

    Checks ``J r_i = r^(k)_i J`` (only for RND solutions) and
    ``Delta r_i = r_{d-i} Delta`` (for all solutions).  Returns
    ``("guitar" | "garside", word, i)`` with 1-based position ``i``.
    """
    if k.n != sol.n:
        raise SizeError(f"map on {k.n} points, solution on {sol.n}")
    rk = derived_solution(sol, k, check=False) if sol.is_rnd else None
    for w in _words(sol.n, d):
        delta = garside_map(sol, k, w)
        jw = _guitar(sol, k, w) if rk is not None else None
        for i in range(d - 1):
            rw = apply_at(sol, w, i)
            if garside_map(sol, k, rw) != apply_at(sol, delta, d - 2 - i):
                return ("garside", w, i + 1)
            if rk is not None and _guitar(sol, k, rw) != apply_at(rk, jw, i):
                return ("guitar", w, i + 1)
    return None


def verify_entwining(sol: FiniteSolution, k: PointMap, d: int) -> bool:
    return find_entwining_failure(sol, k, d) is None


def find_product_failure(sol: FiniteSolution, k: PointMap, p: int, q: int) -> Optional[tuple]:
    """First (kind, a, b) violating the product formulas for |a| = p, |b| = q."""
    if k.n != sol.n:
        raise SizeError(f"map on {k.n} points, solution on {sol.n}")
    for b in _words(sol.n, q):
        db = garside_map(sol, k, b)
        jb = _guitar(sol, k, b)
        for a in _words(sol.n, p):
            lam_a_db, rho_db_a = _cross_blocks(sol, a, db)
            if _guitar(sol, k, a + b) != _guitar(sol, k, rho_db_a) + jb:
                return ("guitar", a, b)
            if garside_map(sol, k, a + b) != lam_a_db + garside_map(sol, k, rho_db_a):
                return ("garside", a, b)
    return None


def verify_product_formulas(sol: FiniteSolution, k: PointMap, p: int, q: int) -> bool:
    return find_product_failure(sol, k, p, q) is None
