"""Reflections: enumeration, one-coordinate criteria, twist maps and classification."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FiniteSolution, PointMap, all_maps, check_involutive_invertible, check_re, solutions_isomorphic
from .derive import derived_solution
from .errors import PreconditionError, ResourceError, SizeError
from .monoid import UnionFind

__all__ = [
    "MAX_N",
    "ReflectionSet",
    "t_map",
    "u_map",
    "is_reflection_involutive_left",
    "is_reflection_involutive_right",
    "enumerate_reflections",
    "lambda_commuting_maps",
    "rho_fixing_maps",
    "sufficient_reflections",
    "twist_maps",
    "equivalence_classes",
    "verify_equivalence_conjugation",
    "classify_derived",
]

MAX_N = 8

METHODS = ("brute", "t-criterion", "u-criterion", "lambda-commuting", "rho-fixing")


@dataclass(frozen=True)
class ReflectionSet:
    solution: str
    reflections: tuple[PointMap, ...]
    methods: tuple[str, ...]

    def __len__(self):
        return len(self.reflections)

    def __iter__(self):
        return iter(self.reflections)

    def __contains__(self, k):
        return k in self.reflections


def _is_involutive(sol):
    return check_involutive_invertible(sol)[0]


def _require(sol, *, lnd=False, rnd=False):
    if not _is_involutive(sol):
        raise PreconditionError(f"{sol.label()} is not involutive")
    if lnd:
        sol.require_lnd()
    if rnd:
        sol.require_rnd()


def t_map(sol: FiniteSolution, k: PointMap, a: int, b: int) -> int:
    """lambda_{lambda_a(b)} k rho_b(a)."""
    return sol.lam[sol.lam[a][b]][k.image[sol.rho[b][a]]]


def u_map(sol: FiniteSolution, k: PointMap, a: int, b: int) -> int:
    """rho_{k rho_b(a)} lambda_a(b)."""
    return sol.rho[k.image[sol.rho[b][a]]][sol.lam[a][b]]


def _left_criterion(sol, k):
    kk = k.image
    return all(
        t_map(sol, k, a, kk[b]) == t_map(sol, k, a, b) for a in range(sol.n) for b in range(sol.n)
    )


def _right_criterion(sol, k):
    kk = k.image
    return all(
        u_map(sol, k, a, kk[b]) == kk[u_map(sol, k, a, b)] for a in range(sol.n) for b in range(sol.n)
    )


def is_reflection_involutive_left(sol: FiniteSolution, k: PointMap) -> bool:
    """First-coordinate test, valid for involutive LND solutions."""
    _require(sol, lnd=True)
    return _left_criterion(sol, k)


def is_reflection_involutive_right(sol: FiniteSolution, k: PointMap) -> bool:
    """Second-coordinate test, valid for involutive RND solutions."""
    _require(sol, rnd=True)
    return _right_criterion(sol, k)


def enumerate_reflections(sol: FiniteSolution, criterion: str = "auto", max_n: int = MAX_N) -> ReflectionSet:
    """All reflections, in lexicographic order of image vectors.

    ``criterion`` is ``auto``, ``brute``, ``left`` or ``right``.  With a
    one-coordinate criterion every accepted map, and a sample of rejected
    ones, is re-checked against the full reflection equation.
    """
    if sol.n > max_n:
        raise ResourceError(f"{sol.n}^{sol.n} candidate maps exceed the budget (n <= {max_n})")
    if criterion == "auto":
        if _is_involutive(sol) and sol.is_lnd:
            criterion = "left"
        elif _is_involutive(sol) and sol.is_rnd:
            criterion = "right"
        else:
            criterion = "brute"
    if criterion == "brute":
        test, method = check_re, "brute"
    elif criterion == "left":
        _require(sol, lnd=True)
        test, method = _left_criterion, "t-criterion"
    elif criterion == "right":
        _require(sol, rnd=True)
        test, method = _right_criterion, "u-criterion"
    else:
        raise ValueError(f"unknown criterion {criterion!r}")

    found = []
    rejected_checked = 0
    for k in all_maps(sol.n):
        if test(sol, k):
            if method != "brute" and not check_re(sol, k):
                raise AssertionError(f"{method} accepted non-reflection {k}")
            found.append(k)
        elif method != "brute" and rejected_checked < 64:
            rejected_checked += 1
            if check_re(sol, k):
                raise AssertionError(f"{method} rejected reflection {k}")
    return ReflectionSet(sol.label(), tuple(found), (method,) * len(found))


def lambda_commuting_maps(sol: FiniteSolution) -> list[PointMap]:
    """Maps with k lambda_a = lambda_a k for all a (involutive LND solutions)."""
    _require(sol, lnd=True)
    lam = sol.lam
    return [
        k for k in all_maps(sol.n)
        if all(k.image[lam[a][x]] == lam[a][k.image[x]] for a in range(sol.n) for x in range(sol.n))
    ]


def rho_fixing_maps(sol: FiniteSolution) -> list[PointMap]:
    """Maps with rho_{k(a)} = rho_a for all a (involutive RND solutions)."""
    _require(sol, rnd=True)
    rho = sol.rho
    return [k for k in all_maps(sol.n) if all(rho[k.image[a]] == rho[a] for a in range(sol.n))]


def sufficient_reflections(sol: FiniteSolution) -> tuple[list[PointMap], list[PointMap]]:
    lam_list = lambda_commuting_maps(sol)
    rho_list = rho_fixing_maps(sol)
    for k in lam_list + rho_list:
        if not check_re(sol, k):
            raise AssertionError(f"sufficient condition produced non-reflection {k}")
    return lam_list, rho_list


def twist_maps(sol: FiniteSolution) -> list[PointMap]:
    """Maps phi with r phi_2 = phi_1 r, checked on all of X^2."""
    if not _is_involutive(sol):
        raise PreconditionError(f"{sol.label()} is not involutive")
    n = sol.n
    out = []
    for phi in all_maps(n):
        p = phi.image
        if all(sol(a, p[b]) == (p[sol.lam[a][b]], sol.rho[b][a]) for a in range(n) for b in range(n)):
            out.append(phi)
    return out


def equivalence_classes(sol: FiniteSolution, refls, bijective_only: bool = False) -> list[list[PointMap]]:
    """Finest partition of ``refls`` closed under k -> phi k psi for twist maps phi, psi.

    Classes are sorted internally and ordered by their least member.  Only
    bijective twists are guaranteed to relate isomorphic derived solutions;
    ``bijective_only=True`` restricts the relation to those.
    """
    refls = list(refls)
    index = {k: i for i, k in enumerate(refls)}
    twists = twist_maps(sol)
    if bijective_only:
        twists = [t for t in twists if t.is_bijective]
    uf = UnionFind(len(refls))
    for i, k in enumerate(refls):
        for phi, psi in itertools.product(twists, repeat=2):
            other = phi.compose(k).compose(psi)
            if other not in index:
                raise AssertionError(f"{phi} o {k} o {psi} = {other} is missing from the reflection set")
            uf.union(i, index[other])
    groups = {}
    for i, k in enumerate(refls):
        groups.setdefault(uf.find(i), []).append(k)
    classes = [sorted(g) for g in groups.values()]
    return sorted(classes, key=lambda c: c[0].image)


def verify_equivalence_conjugation(sol: FiniteSolution, k: PointMap, phi: PointMap, psi: PointMap) -> bool:
    """r^(k) (psi x psi) == (psi x psi) r^(phi k psi) on X^2."""
    if not (k.n == phi.n == psi.n == sol.n):
        raise SizeError("maps and solution have different sizes")
    r1 = derived_solution(sol, k)
    r2 = derived_solution(sol, phi.compose(k).compose(psi))
    s = psi.image
    for a in range(sol.n):
        for b in range(sol.n):
            x, y = r2(a, b)
            if r1(s[a], s[b]) != (s[x], s[y]):
                return False
    return True


def classify_derived(sol: FiniteSolution, refls) -> list[tuple[FiniteSolution, list[PointMap]]]:
    """Group k-derived solutions into isomorphism classes.

    Each class is represented by the derived solution of its least reflection.
    """
    classes = []
    for k in sorted(refls):
        rk = derived_solution(sol, k)
        for rep, members in classes:
            if solutions_isomorphic(rep, rk) is not None:
                members.append(k)
                break
        else:
            classes.append((rk, [k]))
    return classes
