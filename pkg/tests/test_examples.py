"""Small worked examples, one per documented behaviour, in 1-based labels where noted."""
from __future__ import annotations

from yber import catalog
from yber.core import (
    FiniteSolution,
    PointMap,
    all_maps,
    apply_r,
    check_degeneracy,
    check_involutive_invertible,
    check_re,
    check_ybe,
    solutions_isomorphic,
)
from yber.derive import (
    BinaryOp,
    classical_derived,
    derived_solution,
    exchange_law_holds,
    k_shelf_left,
    k_shelf_right,
    left_structure_shelf,
    star_extension,
    structure_shelf,
    verify_shelf_coincidence,
)
from yber.garside import (
    find_entwining_failure,
    garside_map,
    guitar_inverse,
    guitar_map,
    verify_product_formulas,
    word_lambda,
    word_rho,
)
from yber.monoid import find_action_failure, graded_component, verify_graded_bijection
from yber.reflect import (
    classify_derived,
    enumerate_reflections,
    equivalence_classes,
    lambda_commuting_maps,
    rho_fixing_maps,
    t_map,
    twist_maps,
    u_map,
    verify_equivalence_conjugation,
)
from yber.strange import conjugated_operation, general_re_criterion, is_strange, reflection_to_strange


def pm(text):
    return PointMap.parse(text)


def one_based(pair):
    return tuple(v + 1 for v in pair)


def mutations(k):
    """Maps differing from k in exactly one entry."""
    for i in range(k.n):
        for v in range(k.n):
            if v != k.image[i]:
                yield PointMap(k.image[:i] + (v,) + k.image[i + 1:])


# --- core -----------------------------------------------------------------------

def test_apply_r_lookups(ex14, ex15):
    assert one_based(apply_r(FiniteSolution.flip(3), 0, 1)) == (2, 1)
    assert one_based(apply_r(ex14, 0, 2)) == (3, 2)
    assert one_based(apply_r(ex15, 1, 2)) == (2, 3)


def test_ybe_false_for_single_swap():
    sol = FiniteSolution.from_maps([[2, 1], [1, 2]], [[1, 2], [1, 2]])
    assert not check_ybe(sol)


def test_re_examples(ex14):
    assert all(check_re(FiniteSolution.flip(3), k) for k in all_maps(3))
    assert check_re(ex14, pm("333"))
    assert not check_re(ex14, pm("311"))


def test_degeneracy_constant_lambda():
    sol = FiniteSolution.from_maps([[1, 1], [1, 1]], [[1, 2], [1, 2]])
    assert check_degeneracy(sol) == (True, False)


def test_constant_map_is_idempotent():
    sol = FiniteSolution.from_maps([[1, 1], [1, 1]], [[1, 1], [1, 1]])
    assert check_involutive_invertible(sol) == (False, False, (2, 1))


def test_identity_map_power_pair():
    # r(a, b) = (a, b) is involutive, and already r^1 = r^0
    ident = FiniteSolution.from_function(3, lambda a, b: (a, b))
    assert check_ybe(ident)
    assert check_involutive_invertible(ident) == (True, True, (1, 0))
    assert check_involutive_invertible(FiniteSolution.flip(1))[2] == (1, 0)
    assert check_involutive_invertible(FiniteSolution.flip(3)) == (True, True, (2, 0))


def test_isomorphism_examples(ex15):
    r_id = derived_solution(ex15, PointMap.identity(4))
    r_4444 = derived_solution(ex15, pm("4444"))
    assert solutions_isomorphic(r_id, r_4444) is None
    assert solutions_isomorphic(ex15, ex15) == PointMap.identity(4)
    assert solutions_isomorphic(FiniteSolution.flip(2), FiniteSolution.flip(2)) == PointMap.identity(2)


# --- derive ---------------------------------------------------------------------

def test_classical_derived_examples(ex14):
    assert classical_derived(FiniteSolution.flip(3)) == FiniteSolution.flip(3)
    assert classical_derived(ex14) == derived_solution(ex14, pm("123"))


def test_star_extension_of_flip():
    ext, k = star_extension(FiniteSolution.flip(2))
    assert ext == FiniteSolution.flip(3)
    assert k == pm("333")


def test_ex14_structure_shelf_values(ex14):
    op = structure_shelf(ex14)
    # 1 <| 3 = rho_3 lambda_{rho_1^-1(3)}(1) = rho_3 lambda_3(1) = rho_3(2) = 1
    assert op(0, 2) + 1 == 1
    assert op(1, 2) + 1 == 2
    assert op(2, 2) + 1 == 3


def test_shelf_of_ex15_and_its_4444_derivative(ex15):
    assert structure_shelf(ex15).same_table(structure_shelf(derived_solution(ex15, pm("4444"))))


def test_involutive_left_shelf_is_trivial(corpus):
    for sol in corpus:
        if check_involutive_invertible(sol)[0]:
            op = left_structure_shelf(sol)
            assert all(op(b, a) == a for a in range(sol.n) for b in range(sol.n))


def test_left_shelf_of_classical_derived_ex15(ex15):
    rk = classical_derived(ex15)
    assert rk.is_lnd
    op = left_structure_shelf(rk)
    for b in range(4):
        for a in range(4):
            assert op(b, a) == rk.lam[b][rk.rho[rk.lam_inv[a][b]][a]]


def test_k_shelves_on_flip():
    flip = FiniteSolution.flip(3)
    for k in all_maps(3):
        right = k_shelf_right(flip, k)
        assert all(right(a, b) == a for a in range(3) for b in range(3))
        left = k_shelf_left(flip, k)
        assert all(left(b, a) == k(a) for a in range(3) for b in range(3))


def test_ex14_k_left_shelves(ex14):
    op = k_shelf_left(ex14, pm("333"))
    assert all(op(b, a) == 2 for a in range(3) for b in range(3))
    k = pm("113")
    op = k_shelf_left(ex14, k)
    for b in range(3):
        for a in range(3):
            expected = k(a) if not (b == 2 and a != 2) else ex14.lam[b][k(a)]
            assert op(b, a) == expected
    assert exchange_law_holds(ex14, pm("333"))


def test_ex14_constant_reflection_skips_second_identity(ex14):
    assert verify_shelf_coincidence(ex14, pm("333")) == (True, None)
    assert verify_shelf_coincidence(FiniteSolution.flip(2), pm("21")) == (True, True)


# --- garside --------------------------------------------------------------------

def test_ex14_garside_and_guitar(ex14):
    k = pm("333")
    assert one_based(garside_map(ex14, k, (0, 0))) == (3, 3)
    assert one_based(guitar_map(ex14, k, (0, 0))) == (2, 1)
    assert one_based(guitar_inverse(ex14, k, (1, 0))) == (1, 1)


def test_classical_guitar_degree_three(ex15):
    k = PointMap.identity(4)
    lam, rho = ex15.lam, ex15.rho
    for a1 in range(4):
        for a2 in range(4):
            for a3 in range(4):
                b1, b2 = lam[a2][a3], rho[a3][a2]
                first = rho[b2][rho[b1][a1]]
                assert guitar_map(ex15, k, (a1, a2, a3)) == (first, rho[a3][a2], a3)


def test_flip_garside_guitar_and_blocks():
    flip = FiniteSolution.flip(3)
    for k in all_maps(3):
        assert guitar_map(flip, k, (0, 1, 2)) == (0, 1, 2)
    assert garside_map(flip, PointMap.identity(3), (0, 1, 2)) == (2, 1, 0)
    assert word_lambda(flip, (0, 1), (2,)) == (2,)
    assert word_rho(flip, (0, 1), (2,)) == (0, 1)
    assert word_lambda(flip, (), (1, 2)) == (1, 2)
    assert word_rho(flip, (0,), ()) == (0,)


def test_mutated_reflection_breaks_entwining(ex14):
    for k in enumerate_reflections(ex14):
        for bad in mutations(k):
            if not check_re(ex14, bad):
                assert find_entwining_failure(ex14, bad, 3) is not None, bad


def test_product_formula_examples(ex14, ex15):
    assert verify_product_formulas(ex14, pm("333"), 1, 1)
    for p, q in ((1, 2), (2, 1), (2, 2)):
        assert verify_product_formulas(ex15, pm("1114"), p, q)


# --- monoid ---------------------------------------------------------------------

def test_graded_examples(ex14):
    assert len(graded_component(FiniteSolution.flip(3), 2)) == 6
    r333 = derived_solution(ex14, pm("333"))
    assert len(graded_component(ex14, 2)) == len(graded_component(r333, 2))
    for d in (2, 3):
        assert verify_graded_bijection(ex14, pm("333"), d)


def test_monoid_action_examples(ex14):
    assert find_action_failure(ex14, pm("333"), 2) is None
    witnesses = [find_action_failure(ex14, bad, 2) for bad in mutations(pm("333")) if not check_re(ex14, bad)]
    assert any(w is not None for w in witnesses)


def test_action_is_a_monoid_action(ex14):
    # act(bc, a) = act(b, act(c, a)) by construction; check against the two-letter relation
    k = pm("113")
    op = k_shelf_right(ex14, k).table
    rk = derived_solution(ex14, k)
    for b in range(3):
        for c in range(3):
            b1, c1 = rk(b, c)
            for a in range(3):
                assert op[op[a][c]][b] == op[op[a][c1]][b1]


# --- reflect --------------------------------------------------------------------

def test_t_and_u_examples(ex14):
    flip = FiniteSolution.flip(3)
    for k in all_maps(3):
        for a in range(3):
            for b in range(3):
                assert t_map(flip, k, a, b) == k(a)
                assert u_map(flip, k, a, b) == b
    k = pm("333")
    assert t_map(ex14, k, 0, 2) + 1 == 3
    assert u_map(ex14, k, 0, 2) + 1 == 3


def test_permutation_solution_examples():
    sol = catalog.get("perm3:(123)")
    assert all(check_re(sol, k) for k in all_maps(3))
    f = sol.lam[0]
    assert lambda_commuting_maps(sol) == [
        k for k in all_maps(3) if all(k(f[x]) == f[k(x)] for x in range(3))
    ]
    assert rho_fixing_maps(sol) == list(all_maps(3))
    classes = classify_derived(sol, enumerate_reflections(sol).reflections)
    assert len(classes) == 1 and classes[0][0] == FiniteSolution.flip(3)


def test_two_point_permutation_classes():
    sol = catalog.get("perm2:(12)")
    assert [str(t) for t in twist_maps(sol)] == ["12", "21"]
    classes = [[str(k) for k in c] for c in equivalence_classes(sol, enumerate_reflections(sol))]
    assert classes == [["11", "22"], ["12", "21"]]


def test_fixed_point_gives_single_class():
    sol = catalog.get("perm3:(12)")
    assert len(equivalence_classes(sol, enumerate_reflections(sol))) == 1


def test_conjugation_example(ex14):
    phi = psi = pm("213")
    assert phi.compose(pm("113")).compose(psi) == pm("223")
    assert verify_equivalence_conjugation(ex14, pm("113"), phi, psi)


def test_ex14_derived_classes(ex14):
    classes = classify_derived(ex14, enumerate_reflections(ex14).reflections)
    assert [[str(k) for k in m] for _, m in classes] == [["113", "123", "213", "223"], ["333"]]
    assert classes[0][0] == FiniteSolution.flip(3)


# --- strange --------------------------------------------------------------------

def test_strange_small_operations():
    n = 3
    const = BinaryOp(n, ((1,) * n,) * n)
    right = BinaryOp(n, (tuple(range(n)),) * n)
    left = BinaryOp(2, ((0, 0), (1, 1)))
    assert is_strange(const)
    assert is_strange(right)
    assert not is_strange(left)


def test_ex14_strange_operations(ex14):
    for text in ("123", "213", "333"):
        k = pm(text)
        op = reflection_to_strange(ex14, k)
        assert all(op(b, a) == k(a) for a in range(3) for b in range(3))
    for text in ("113", "223"):
        k = pm(text)
        op = reflection_to_strange(ex14, k)
        for b in range(3):
            for a in range(3):
                if b == 2 and a != 2:
                    assert op(b, a) != k(a)
                else:
                    assert op(b, a) == k(a)


def test_flip_strange_operation():
    flip = FiniteSolution.flip(3)
    for k in all_maps(3):
        op = conjugated_operation(flip, k)
        assert all(op(b, a) == k(a) for a in range(3) for b in range(3))


def test_ex14_strange_agreement_counts(ex14):
    verdicts = [is_strange(conjugated_operation(ex14, k)) for k in all_maps(3)]
    assert sum(verdicts) == 5 and len(verdicts) - sum(verdicts) == 22


def test_general_criterion_examples(ex14):
    assert general_re_criterion(ex14, pm("333"))
    assert not general_re_criterion(ex14, pm("311"))
