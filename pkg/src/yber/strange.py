"""Strange operations, (a * b) * a = b * a, and their link to reflections.

``count_strange`` counts operation tables on an n-set.  By default it counts
them up to relabelling of the set (isomorphism classes), using Burnside's
lemma: the number of classes is the average over all permutations sigma of
the number of tables fixed by conjugation with sigma.  Each fixed-table count
is an exact backtracking search over table cells with unit propagation of the
strange axiom and of the sigma-invariance.
"""
from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Optional

import numba
import numpy as np

from .core import FiniteSolution, PointMap, all_maps, check_involutive_invertible, check_re
from .derive import BinaryOp, k_shelf_left, left_structure_shelf
from .errors import PreconditionError, ResourceError

__all__ = [
    "MAX_COUNT_N",
    "MAX_LIST_N",
    "is_strange",
    "conjugated_operation",
    "reflection_to_strange",
    "recover_reflection",
    "strange_criterion",
    "harpoon_operations",
    "general_re_criterion",
    "count_strange",
    "count_fixed_tables",
    "list_strange",
    "default_threads",
]

MAX_COUNT_N = 5
MAX_LIST_N = 3


def is_strange(op: BinaryOp) -> bool:
    t, n = op.table, op.n
    return all(t[t[a][b]][a] == t[b][a] for a in range(n) for b in range(n))


def _require_lnd_involutive(sol):
    sol.require_lnd()
    if not check_involutive_invertible(sol)[0]:
        raise PreconditionError(f"{sol.label()} is not involutive")


def conjugated_operation(sol: FiniteSolution, k: PointMap) -> BinaryOp:
    """``b * a = lambda_b k lambda_b^{-1}(a)`` for any map k (no reflection check)."""
    _require_lnd_involutive(sol)
    lam, linv, kk, n = sol.lam, sol.lam_inv, k.image, sol.n
    table = [[lam[b][kk[linv[b][a]]] for a in range(n)] for b in range(n)]
    return BinaryOp(n, table, "strange")


def reflection_to_strange(sol: FiniteSolution, k: PointMap) -> BinaryOp:
    _require_lnd_involutive(sol)
    if not check_re(sol, k):
        raise PreconditionError(f"{k} is not a reflection for {sol.label()}")
    return conjugated_operation(sol, k)


def recover_reflection(sol: FiniteSolution, op: BinaryOp) -> PointMap:
    """Invert :func:`conjugated_operation`: k = lambda_b^{-1} l_b lambda_b, the same for every b."""
    sol.require_lnd()
    lam, linv, t, n = sol.lam, sol.lam_inv, op.table, sol.n
    images = {tuple(linv[b][t[b][lam[b][x]]] for x in range(n)) for b in range(n)}
    if len(images) != 1:
        raise PreconditionError("operation does not come from a single map k")
    return PointMap(images.pop())


def strange_criterion(sol: FiniteSolution, k: PointMap) -> bool:
    """One-relation reflection test involving only the lambdas."""
    _require_lnd_involutive(sol)
    lam, linv, kk, n = sol.lam, sol.lam_inv, k.image, sol.n
    for a in range(n):
        for b in range(n):
            c = lam[a][kk[linv[a][b]]]
            if lam[c][kk[linv[c][a]]] != lam[b][kk[linv[b][a]]]:
                return False
    return True


def harpoon_operations(sol: FiniteSolution, k: PointMap) -> tuple[BinaryOp, BinaryOp]:
    """``(up, down)`` with ``b up a = b |>~_k (b |>~' a)`` and ``b down a = b |>~' (b |>~_k a)``.

    ``|>~'`` is the left inverse of the left structure shelf.
    """
    lop = left_structure_shelf(sol)
    wlop = lop.left_inverse().table
    klop = k_shelf_left(sol, k).table
    n = sol.n
    up = [[klop[b][wlop[b][a]] for a in range(n)] for b in range(n)]
    down = [[wlop[b][klop[b][a]] for a in range(n)] for b in range(n)]
    return BinaryOp(n, up, "harpoon-up"), BinaryOp(n, down, "harpoon-down")


def general_re_criterion(sol: FiniteSolution, k: PointMap, compact: bool = True) -> bool:
    """Reflection test for invertible LND solutions through the left shelf operations.

    ``compact=True`` uses the two harpoon relations, ``compact=False`` the
    expanded pair written with the left shelf and ``|>~_k`` only.
    """
    sol.require_lnd()
    if not check_involutive_invertible(sol)[1]:
        raise PreconditionError(f"{sol.label()} is not invertible")
    n = sol.n
    lop = left_structure_shelf(sol).table
    klop = k_shelf_left(sol, k).table
    if compact:
        up, down = (op.table for op in harpoon_operations(sol, k))
        for a in range(n):
            for b in range(n):
                if klop[up[b][a]][b] != klop[a][b]:
                    return False
                if down[klop[a][b]][a] != up[b][a]:
                    return False
        return True
    for a in range(n):
        for b in range(n):
            x, y = klop[b][a], lop[b][a]
            if klop[x][b] != klop[y][b]:
                return False
            if lop[klop[x][b]][x] != klop[klop[y][b]][y]:
                return False
    return True


# --- counting kernel -------------------------------------------------------


@numba.njit(cache=True, nogil=True)
def _assign(t, c, v, trail, tlen):
    t[c] = v
    trail[tlen[0]] = c
    tlen[0] += 1


@numba.njit(cache=True, nogil=True)
def _propagate(t, n, sig, img, use_sig, trail, tlen):
    # sweep all constraints until nothing is forced; False on conflict
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                c = a * n + b
                v = t[c]
                if v < 0:
                    continue
                if use_sig:
                    d = img[c]
                    w = sig[v]
                    if t[d] < 0:
                        _assign(t, d, w, trail, tlen)
                        changed = True
                    elif t[d] != w:
                        return False
                lhs = v * n + a
                rhs = b * n + a
                x = t[lhs]
                y = t[rhs]
                if x >= 0:
                    if y < 0:
                        _assign(t, rhs, x, trail, tlen)
                        changed = True
                    elif x != y:
                        return False
                elif y >= 0:
                    _assign(t, lhs, y, trail, tlen)
                    changed = True
    return True


@numba.njit(cache=True, nogil=True)
def _count_completions(t, n, sig, max_nodes):
    """Number of strange completions of the partial table t (-1 = empty) fixed by sig.

    Returns -1 when more than ``max_nodes`` search nodes would be needed
    (``max_nodes <= 0`` means unlimited).  ``t`` is modified in place.
    """
    N = n * n
    use_sig = False
    for i in range(n):
        if sig[i] != i:
            use_sig = True
    img = np.empty(N, np.int64)
    for c in range(N):
        img[c] = sig[c // n] * n + sig[c % n]
    trail = np.empty(N, np.int64)
    tlen = np.zeros(1, np.int64)
    if not _propagate(t, n, sig, img, use_sig, trail, tlen):
        return 0
    first = -1
    for c in range(N):
        if t[c] < 0:
            first = c
            break
    if first < 0:
        return 1
    dcell = np.empty(N, np.int64)
    dval = np.empty(N, np.int64)
    dtl = np.empty(N, np.int64)
    depth = 0
    dcell[0] = first
    dval[0] = -1
    dtl[0] = tlen[0]
    total = 0
    nodes = 0
    while depth >= 0:
        while tlen[0] > dtl[depth]:
            tlen[0] -= 1
            t[trail[tlen[0]]] = -1
        v = dval[depth] + 1
        if v == n:
            depth -= 1
            continue
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            return -1
        dval[depth] = v
        c = dcell[depth]
        _assign(t, c, v, trail, tlen)
        if not _propagate(t, n, sig, img, use_sig, trail, tlen):
            continue
        nxt = -1
        for c2 in range(c + 1, N):
            if t[c2] < 0:
                nxt = c2
                break
        if nxt < 0:
            total += 1
            continue
        depth += 1
        dcell[depth] = nxt
        dval[depth] = -1
        dtl[depth] = tlen[0]
    return total


def default_threads() -> int:
    env = os.environ.get("YBER_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _row_zero_orbits(n):
    """Orbit representatives (with orbit sizes) of first rows under relabellings fixing 0."""
    stabiliser = [(0,) + p for p in itertools.permutations(range(1, n))]
    seen = set()
    reps = []
    for row in itertools.product(range(n), repeat=n):
        if row in seen:
            continue
        orbit = set()
        for s in stabiliser:
            moved = [0] * n
            for b in range(n):
                moved[s[b]] = s[row[b]]
            orbit.add(tuple(moved))
        seen |= orbit
        reps.append((row, len(orbit)))
    return reps


def _jobs(n, sigma):
    """Partial tables (with multiplicities) partitioning the search for tables fixed by sigma."""
    if all(sigma[i] == i for i in range(n)):
        for row, weight in _row_zero_orbits(n):
            t = np.full(n * n, -1, np.int64)
            t[:n] = row
            yield t, weight
    else:
        for v in range(n):
            t = np.full(n * n, -1, np.int64)
            t[0] = v
            yield t, 1


def count_fixed_tables(n: int, sigma=None, threads: Optional[int] = None, max_nodes: int = 0) -> int:
    """Number of strange tables T with T[sigma x][sigma y] = sigma(T[x][y])."""
    sig = np.arange(n, dtype=np.int64) if sigma is None else np.asarray(sigma, dtype=np.int64)
    jobs = list(_jobs(n, sig))

    def run(job):
        t, weight = job
        c = _count_completions(t, n, sig, max_nodes)
        return c, weight

    threads = threads or default_threads()
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]
    total = 0
    for c, weight in results:
        if c < 0:
            raise ResourceError(f"strange-operation search for n={n} exceeded {max_nodes} nodes")
        total += c * weight
    return total


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _cycle_type_rep(parts):
    sigma, start = [], 0
    for p in parts:
        sigma += [start + (i + 1) % p for i in range(p)]
        start += p
    return sigma


def _class_size(parts):
    n = sum(parts)
    z = 1
    for p, m in ((p, parts.count(p)) for p in set(parts)):
        z *= p**m * math.factorial(m)
    return math.factorial(n) // z


def count_strange(
    n: int,
    up_to_isomorphism: bool = True,
    threads: Optional[int] = None,
    max_n: int = MAX_COUNT_N,
    max_nodes: int = 0,
) -> int:
    """Number of strange operations on an n-set (isomorphism classes by default)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceError(f"counting strange operations is budgeted for n <= {max_n}")
    if not up_to_isomorphism:
        return count_fixed_tables(n, None, threads, max_nodes)
    total = 0
    for parts in _partitions(n):
        sigma = _cycle_type_rep(parts)
        total += _class_size(parts) * count_fixed_tables(n, sigma, threads, max_nodes)
    orbits, rem = divmod(total, math.factorial(n))
    if rem:
        raise AssertionError("Burnside sum not divisible by n!")
    return orbits


def _conjugate_table(table, n, sigma):
    out = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            out[sigma[x] * n + sigma[y]] = sigma[table[x * n + y]]
    return tuple(out)


def list_strange(n: int, up_to_isomorphism: bool = True, max_n: int = MAX_LIST_N) -> Iterator[BinaryOp]:
    """Strange tables in row-major lexicographic order.

    Up to isomorphism, each class is represented by its lexicographically
    least table.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceError(f"listing strange operations is limited to n <= {max_n}")
    perms = list(itertools.permutations(range(n)))
    for flat in itertools.product(range(n), repeat=n * n):
        if any(flat[flat[a * n + b] * n + a] != flat[b * n + a] for a in range(n) for b in range(n)):
            continue
        if up_to_isomorphism and any(_conjugate_table(flat, n, s) < flat for s in perms):
            continue
        yield BinaryOp(n, [flat[i * n:(i + 1) * n] for i in range(n)], "strange")


def reflections_as_strange(sol: FiniteSolution) -> dict:
    """Map every map k to whether its conjugated operation is strange."""
    return {k: is_strange(conjugated_operation(sol, k)) for k in all_maps(sol.n)}
