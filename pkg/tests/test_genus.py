import itertools
import random

import pytest
from hypothesis import given, strategies as st

from helpers import FIGURE_EIGHT, TREFOIL, random_unimodular
from zgenus.blanchfield import verify_certificate
from zgenus.genus import (
    SearchBudget,
    algebraic_genus,
    complete_to_unimodular,
    find_hermitian_presentation,
    is_alexander_trivial_block,
    shake_genus,
    weakly_slice_verdict,
    z_genus_knot,
    z_genus_link,
)
from zgenus.laurent import LaurentPoly
from zgenus.matrix import LambdaMatrix, det, int_det, int_matmul, int_transpose
from zgenus.seifert import (
    internal_band_sum,
    random_seifert,
    split_system,
    validate_knot_seifert,
    whitehead_double_2,
    whitehead_double_3,
)

UNKNOT = validate_knot_seifert([])
ALEX_ONE = validate_knot_seifert([[-1, 1], [0, 0]])


def bounds(rep):
    return rep.lower, rep.upper, rep.exact


def check_witness(K, rep):
    B = [list(r) for r in rep.witness_basis]
    assert abs(int_det(B)) == 1
    W = int_matmul(int_matmul(int_transpose(B), [list(r) for r in K.V]), B)
    k = len(rep.witness_block)
    assert [r[:k] for r in W[:k]] == [list(r) for r in rep.witness_block]
    n = k // 2
    assert det(LambdaMatrix.presentation(rep.witness_block)) == LaurentPoly.monomial(1, n)
    assert K.g - n == rep.upper


def test_algebraic_genus_examples(trefoil):
    assert bounds(algebraic_genus(UNKNOT)) == (0, 0, True)
    assert bounds(algebraic_genus(trefoil)) == (1, 1, True)
    for n, a1, a2 in [(1, 1, 1), (-2, -1, 1), (3, 1, -1)]:
        K = internal_band_sum(whitehead_double_2(n, a1, a2))
        rep = algebraic_genus(K)
        assert bounds(rep) == (1, 1, True)
        assert rep.witness_block == ((0, a1), (0, 0))
        check_witness(K, rep)


def test_z_genus_knot_examples(trefoil):
    assert z_genus_knot(ALEX_ONE).upper == 0
    rep = z_genus_knot(trefoil)
    assert rep.invariant == "g_Z" and rep.value == 1
    assert z_genus_knot(internal_band_sum(whitehead_double_2(1, 1, 1))).value == 1


def test_z_genus_link_examples(trefoil):
    assert z_genus_link(split_system(trefoil, 2)).value == 1
    # n_1 = 0 and |n_2| = |n_3|, so the clasps a_2, a_3 must disagree
    rep = z_genus_link(whitehead_double_3(0, 2, 2, 1, -1, 1))
    assert rep.value == 0 and weakly_slice_verdict(rep) == "yes"
    rep = z_genus_link(whitehead_double_3(0, 2, 2, 1, -1, -1))
    assert rep.lower >= 1
    for a in itertools.product((1, -1), repeat=3):
        rep = z_genus_link(whitehead_double_3(1, 1, 1, *a))
        assert rep.lower >= 1 and weakly_slice_verdict(rep) == "no"


def test_z_genus_link_is_band_sum_genus():
    for seed in range(6):
        S = split_system(random_seifert(1 + seed % 2, 2, seed), 2)
        a, b = z_genus_link(S), z_genus_knot(internal_band_sum(S))
        assert bounds(a) == bounds(b) and a.invariant == "g_Z(link)"


def test_split_sum_is_connected_sum():
    V = [[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    rep = z_genus_link(split_system(V, 2))
    assert bounds(rep) == (2, 2, True)
    V = [r[:2] + [0, 0] for r in TREFOIL] + [[0, 0] + r for r in FIGURE_EIGHT]
    rep = z_genus_link(split_system(V, 2))
    assert rep.lower == 1 and rep.upper <= 2


def test_shake_genus_examples(trefoil):
    assert shake_genus(UNKNOT).value == 0
    assert shake_genus(ALEX_ONE).value == 0
    rep = shake_genus(trefoil)
    assert rep.value == 1 and rep.invariant == "g_Z^sh"
    assert rep.checks["P_2,1"]["upper"] == 1 and rep.checks["P_2,1"]["agrees"]
    assert rep.checks["P_1,0"]["agrees"]


def test_find_hermitian_presentation_examples(trefoil):
    hit = find_hermitian_presentation(ALEX_ONE, 0)
    assert hit.presentation.A.n == 0 and hit.report.verdict == "pass"
    hit = find_hermitian_presentation(trefoil, 1)
    assert hit is not None and hit.report.verdict == "pass"
    assert verify_certificate(hit.presentation, trefoil, 1).verdict == "pass"
    assert find_hermitian_presentation(trefoil, 0) is None
    assert find_hermitian_presentation(trefoil, 1, SearchBudget(max_candidates=3)) is None
    with pytest.raises(ValueError):
        find_hermitian_presentation(trefoil, -1)


def test_find_hermitian_presentation_is_deterministic(figure_eight):
    a = find_hermitian_presentation(figure_eight, 1)
    b = find_hermitian_presentation(figure_eight, 1)
    assert a is not None and a.presentation.A == b.presentation.A


def test_search_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(coeff_bound=0)
    with pytest.raises(ValueError):
        SearchBudget(max_candidates=0)


def test_report_json(trefoil):
    out = z_genus_knot(trefoil).to_json()
    assert {"invariant", "lower", "upper", "exact", "witness", "budget_exhausted"} <= out.keys()
    assert out["witness"]["block_size"] == 0


# -- helpers -----------------------------------------------------------


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_trivial_block_closed_form(entries):
    A = [entries[:2], entries[2:]]
    expected = det(LambdaMatrix.presentation(A)) == LaurentPoly.monomial(1, 1)
    assert is_alexander_trivial_block(A) == expected


def test_trivial_block_larger_sizes():
    rng = random.Random(3)
    hits = 0
    for _ in range(200):
        A = [[rng.randint(-1, 1) for _ in range(4)] for _ in range(4)]
        expected = det(LambdaMatrix.presentation(A)) == LaurentPoly.monomial(1, 2)
        assert is_alexander_trivial_block(A) == expected
        hits += expected
    assert hits > 0
    assert is_alexander_trivial_block([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert not is_alexander_trivial_block([[1]])
    assert is_alexander_trivial_block([])


@given(st.integers(0, 10**6), st.integers(2, 6), st.integers(1, 3))
def test_complete_to_unimodular(seed, dim, k):
    k = min(k, dim)
    U = random_unimodular(random.Random(seed), dim, steps=10)
    cols = [[U[i][j] for i in range(dim)] for j in range(k)]
    P = complete_to_unimodular(cols, dim)
    assert abs(int_det(P)) == 1
    assert all(P[i][j] == cols[j][i] for j in range(k) for i in range(dim))


def test_complete_to_unimodular_rejects_imprimitive():
    with pytest.raises(ValueError):
        complete_to_unimodular([[2, 0, 0]], 3)


# -- properties --------------------------------------------------------


@pytest.mark.parametrize("seed", range(4))
def test_budget_monotonicity(seed):
    K = random_seifert(3, 1, seed)
    prev = None
    for cap in (5, 50, 400):
        rep = algebraic_genus(K, SearchBudget(max_candidates=cap, seed=seed))
        check_witness(K, rep)
        if prev is not None:
            assert rep.upper <= prev.upper and rep.lower >= prev.lower
        prev = rep


@pytest.mark.parametrize("seed", range(6))
def test_congruence_invariance(seed):
    rng = random.Random(seed)
    K = random_seifert(2, 2, seed)
    U = random_unimodular(rng, 4)
    W = validate_knot_seifert(int_matmul(int_matmul(int_transpose(U), [list(r) for r in K.V]), U))
    a, b = algebraic_genus(K), algebraic_genus(W)
    assert a.lower == b.lower
    if a.exact and b.exact:
        assert a.upper == b.upper
    check_witness(K, a)
    check_witness(W, b)


def test_parallel_shake_check_for_figure_eight(figure_eight):
    rep = shake_genus(figure_eight)
    assert rep.value == 1 and all(c["agrees"] for c in rep.checks.values())
