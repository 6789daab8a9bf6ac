"""Graded components of structure monoids and the maps between them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FiniteSolution, PointMap, apply_at
from .derive import derived_solution, k_shelf_right
from .errors import ResourceError
from .garside import guitar_map

__all__ = [
    "MAX_WORDS",
    "GradedQuotient",
    "UnionFind",
    "graded_component",
    "verify_graded_bijection",
    "monoid_action",
    "find_action_failure",
    "verify_monoid_action",
]

MAX_WORDS = 10**7


class UnionFind:
    """Union by size with path halving over ``0..size-1``."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True


@dataclass(frozen=True)
class GradedQuotient:
    """Degree-d words modulo ``w ~ r_i(w)``.

    ``classes`` are sorted lists of words, ordered by their least word;
    ``class_of`` maps every word to the index of its class.
    """

    degree: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    class_of: dict

    def __len__(self):
        return len(self.classes)

    def representative(self, index: int) -> tuple[int, ...]:
        return self.classes[index][0]


def _encode(w, n):
    code = 0
    for x in w:
        code = code * n + x
    return code


def graded_component(sol: FiniteSolution, d: int) -> GradedQuotient:
    n = sol.n
    total = n**d
    if total > MAX_WORDS:
        raise ResourceError(f"{n}^{d} = {total} words exceeds the limit of {MAX_WORDS}")
    words = list(itertools.product(range(n), repeat=d))
    uf = UnionFind(total)
    for code, w in enumerate(words):
        for i in range(d - 1):
            uf.union(code, _encode(apply_at(sol, w, i), n))
    groups = {}
    for code, w in enumerate(words):
        groups.setdefault(uf.find(code), []).append(w)
    # words are generated in lexicographic order, so each group is already sorted
    classes = sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])
    class_of = {}
    for idx, cls in enumerate(classes):
        for w in cls:
            class_of[w] = idx
    return GradedQuotient(d, tuple(classes), class_of)


def verify_graded_bijection(sol: FiniteSolution, k: PointMap, d: int) -> bool:
    """Does J induce a bijection between the degree-d components of M(X,r) and M(X,r^(k))?"""
    rk = derived_solution(sol, k, check=False)
    q1 = graded_component(sol, d)
    q2 = graded_component(rk, d)
    if len(q1) != len(q2):
        return False
    image = []
    for cls in q1.classes:
        targets = {q2.class_of[guitar_map(sol, k, w)] for w in cls}
        if len(targets) != 1:
            return False
        image.append(targets.pop())
    return len(set(image)) == len(q2)


def monoid_action(op, w, a):
    """``(...((a <| w_d) <| w_{d-1}) ... <| w_1)`` for an operation table ``op``."""
    for x in reversed(w):
        a = op[a][x]
    return a


def find_action_failure(sol: FiniteSolution, k: PointMap, d: int):
    """A ``(word1, word2, a)`` witness with equivalent words acting differently, or None."""
    rk = derived_solution(sol, k, check=False)
    op = k_shelf_right(sol, k).table
    q = graded_component(rk, d)
    for cls in q.classes:
        first = cls[0]
        for a in range(sol.n):
            value = monoid_action(op, first, a)
            for w in cls[1:]:
                if monoid_action(op, w, a) != value:
                    return first, w, a
    return None


def verify_monoid_action(sol: FiniteSolution, k: PointMap, d: int) -> bool:
    return find_action_failure(sol, k, d) is None
