from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import squash
from yber import catalog
from yber.core import FiniteSolution, PointMap, all_maps, check_re
from yber.derive import derived_solution
from yber.errors import PreconditionError, SizeError
from yber.garside import (
    find_entwining_failure,
    find_product_failure,
    garside_map,
    guitar_inverse,
    guitar_map,
    rho_word,
    verify_entwining,
    verify_product_formulas,
    word_lambda,
    word_rho,
)
from yber.reflect import enumerate_reflections


def words(n, d):
    return itertools.product(range(n), repeat=d)


def test_garside_degree_two_by_hand(ex15):
    # Delta = k_2 r_1 k_2, rightmost first
    k = PointMap.parse("4441")
    kk = k.image
    for a, b in words(4, 2):
        x = ex15.lam[a][kk[b]]
        y = kk[ex15.rho[kk[b]][a]]
        assert garside_map(ex15, k, (a, b)) == (x, y)


def test_garside_degree_three_operator_order(ex15):
    # Delta = k_3 r_2 r_1 k_3 r_2 k_3
    k = PointMap.parse("1114")
    kk = k.image

    def r1(w):
        return ex15(w[0], w[1]) + (w[2],)

    def r2(w):
        return (w[0],) + ex15(w[1], w[2])

    def k3(w):
        return w[:2] + (kk[w[2]],)

    for w in words(4, 3):
        assert garside_map(ex15, k, w) == k3(r2(r1(k3(r2(k3(w))))))


def test_low_degree_conventions(ex15):
    k = PointMap.parse("4444")
    assert garside_map(ex15, k, ()) == ()
    assert garside_map(ex15, k, (1,)) == (3,)
    assert guitar_map(ex15, k, ()) == ()
    assert guitar_map(ex15, k, (2,)) == (2,)


def test_guitar_degree_two(ex15):
    k = PointMap.parse("1114")
    for a, b in words(4, 2):
        assert guitar_map(ex15, k, (a, b)) == (ex15.rho[k(b)][a], b)


def test_guitar_degree_three(ex15):
    k = PointMap.parse("1111")
    for a, b, c in words(4, 3):
        d1, d2 = garside_map(ex15, k, (b, c))
        first = ex15.rho[d2][ex15.rho[d1][a]]
        assert guitar_map(ex15, k, (a, b, c)) == (first, ex15.rho[k(c)][b], c)


def test_rho_word_order(ex15):
    assert rho_word(ex15, (0, 3), 1) == ex15.rho[3][ex15.rho[0][1]]
    assert rho_word(ex15, (), 2) == 2


def test_guitar_round_trip(corpus):
    for sol in corpus:
        for k in enumerate_reflections(sol, "brute"):
            for d in range(5):
                seen = set()
                for w in words(sol.n, d):
                    jw = guitar_map(sol, k, w)
                    seen.add(jw)
                    assert guitar_inverse(sol, k, jw) == w
                assert len(seen) == sol.n ** d


def test_guitar_requires_rnd():
    with pytest.raises(PreconditionError):
        guitar_map(squash(2), PointMap.identity(2), (0, 1))


def test_block_crossing_degree_one(ex15):
    for a, b in words(4, 2):
        assert word_lambda(ex15, (a,), (b,)) == (ex15.lam[a][b],)
        assert word_rho(ex15, (a,), (b,)) == (ex15.rho[b][a],)


def test_block_crossing_lengths(ex15):
    u, v = (0, 1, 2), (3, 1)
    assert len(word_lambda(ex15, u, v)) == 2
    assert len(word_rho(ex15, u, v)) == 3
    # rho over a word then of a single letter agrees with the recursive definition
    for a, b, c in words(4, 3):
        assert word_rho(ex15, (a,), (b, c)) == (rho_word(ex15, (b, c), a),)


def test_entwining_on_corpus(corpus):
    for sol in corpus:
        for k in enumerate_reflections(sol, "brute"):
            for d in range(5):
                assert find_entwining_failure(sol, k, d) is None, (sol.name, k, d)


def test_product_formulas_on_corpus(corpus):
    for sol in corpus:
        for k in enumerate_reflections(sol, "brute"):
            for p in range(5):
                for q in range(5 - p):
                    assert verify_product_formulas(sol, k, p, q), (sol.name, k, p, q)


def test_entwining_detects_non_reflection(ex15):
    bad = [k for k in all_maps(4) if not check_re(ex15, k)]
    failures = [find_entwining_failure(ex15, k, 3) for k in bad]
    assert any(f is not None for f in failures)
    kind, w, i = next(f for f in failures if f is not None)
    assert kind in ("garside", "guitar")
    assert len(w) == 3 and 1 <= i <= 2


def test_non_rnd_garside_entwining():
    sol = squash(3)
    assert not sol.is_rnd
    refls = [k for k in all_maps(3) if check_re(sol, k)]
    assert refls
    for k in refls:
        for d in range(5):
            assert verify_entwining(sol, k, d)
        assert verify_product_formulas(sol, k, 2, 2)


def test_size_mismatch(ex15):
    with pytest.raises(SizeError):
        find_entwining_failure(ex15, PointMap.identity(3), 2)
    with pytest.raises(SizeError):
        find_product_failure(ex15, PointMap.identity(3), 1, 1)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.permutations(range(n)), st.data())))
def test_entwining_on_random_permutation_solutions(args):
    f, data = args
    sol = catalog.permutation_solution(tuple(f))
    n = sol.n
    refls = [k for k in all_maps(n) if check_re(sol, k)]
    k = data.draw(st.sampled_from(refls))
    assert verify_entwining(sol, k, 3)
    assert verify_product_formulas(sol, k, 1, 2)
    rk = derived_solution(sol, k)
    assert rk.n == n


def test_flip_garside_reverses():
    flip = FiniteSolution.flip(3)
    ident = PointMap.identity(3)
    for w in words(3, 4):
        assert garside_map(flip, ident, w) == tuple(reversed(w))
