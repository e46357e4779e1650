import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import FIGURE_EIGHT, TREFOIL
from oracles import sympy_alexander
from zgenus.errors import (
    BadBlockPattern,
    BadClaspSign,
    EmptyLink,
    NotUnimodularIntersection,
    OddSize,
    SizeMismatch,
)
from zgenus.laurent import LaurentPoly, is_associate
from zgenus.matrix import LambdaMatrix, det, int_det
from zgenus.seifert import (
    OrientationVector,
    internal_band_sum,
    intersection_form,
    parallel_link,
    random_seifert,
    split_system,
    validate_boundary_system,
    validate_knot_seifert,
    whitehead_double_2,
    whitehead_double_3,
)


def alex(V):
    return det(LambdaMatrix.presentation(V))


def test_validate_knot_seifert():
    K = validate_knot_seifert(TREFOIL)
    assert K.g == 1 and K.size == 2
    assert validate_knot_seifert([]).g == 0
    with pytest.raises(OddSize):
        validate_knot_seifert([[1]])
    with pytest.raises(NotUnimodularIntersection):
        validate_knot_seifert([[1, 2], [0, 1]])
    with pytest.raises(SizeMismatch):
        validate_knot_seifert([[1, 2]])


def test_validate_boundary_system():
    S = validate_boundary_system(TREFOIL, 1)
    assert (S.r, S.g) == (1, 1)
    N = [[0, 0, 0], [0, -1, 1], [0, 0, -1]]
    S = validate_boundary_system(N, 2)
    assert (S.r, S.g, S.V) == (2, 1, ((-1, 1), (0, -1)))
    bad = [row[:] for row in N]
    bad[0][2] = 1
    with pytest.raises(BadBlockPattern):
        validate_boundary_system(bad, 2)
    with pytest.raises(SizeMismatch):
        validate_boundary_system(N, 3)
    with pytest.raises(NotUnimodularIntersection):
        validate_boundary_system([[0, 0, 0], [0, 1, 2], [0, 0, 1]], 2)


def test_internal_band_sum():
    S = validate_boundary_system(TREFOIL, 1)
    assert internal_band_sum(S).V == tuple(map(tuple, TREFOIL))
    W = whitehead_double_2(1, 1, 1)
    assert W.size == 5 and internal_band_sum(W).size == 4
    W3 = whitehead_double_3(1, 2, 3, 1, -1, 1)
    assert W3.size == 8 and internal_band_sum(W3).size == 6


def test_whitehead_double_2_examples():
    assert whitehead_double_2(1, 1, 1).V == ((0, 1, 1, 1), (0, 0, 1, 1), (1, 1, 0, 1), (1, 1, 0, 0))
    d = alex(whitehead_double_2(0, 1, -1).V)
    assert d == LaurentPoly.monomial(1, 2)
    with pytest.raises(BadClaspSign):
        whitehead_double_2(1, 2, 1)


@pytest.mark.parametrize("n", range(-3, 4))
def test_whitehead_intersection_form_unimodular(n):
    for a in itertools.product((1, -1), repeat=2):
        assert int_det(intersection_form(whitehead_double_2(n, *a).V)) == 1


def test_whitehead_double_3_examples():
    for n in [(1, 2, 3), (-2, 1, 0), (2, 2, -1)]:
        for a in [(1, 1, 1), (1, -1, -1)]:
            d = alex(whitehead_double_3(*n, *a).V)
            pa = a[0] * a[1] * a[2]
            assert d.coeff(6) == -2 * n[0] * n[1] * n[2] * pa
            assert d.coeff(5) == (12 * n[0] * n[1] * n[2] * pa - n[0] ** 2 * a[1] * a[2]
                                  - n[1] ** 2 * a[0] * a[2] - n[2] ** 2 * a[0] * a[1])
    assert alex(whitehead_double_3(0, 0, 0, 1, -1, 1).V) == LaurentPoly.monomial(1, 3)
    with pytest.raises(BadClaspSign):
        whitehead_double_3(0, 0, 0, 1, 0, 1)


def test_whitehead_determinants_match_sympy():
    for M in (whitehead_double_2(2, 1, -1).V, whitehead_double_3(1, -2, 3, 1, 1, -1).V):
        assert alex(M) == sympy_alexander(M)


def test_parallel_link_examples(trefoil):
    S = parallel_link(trefoil, 1, 0)
    assert S.r == 1 and S.N == trefoil.V
    S = parallel_link(trefoil, 1, 1)
    assert is_associate(alex(internal_band_sum(S).V), LaurentPoly.constant(1))
    S = parallel_link(trefoil, 2, 0)
    assert alex(internal_band_sum(S).V).canonical() == LaurentPoly.parse("t^4 - t^2 + 1")
    with pytest.raises(EmptyLink):
        parallel_link(trefoil, 0, 0)


def test_parallel_single_copy_orientation(figure_eight):
    S = parallel_link(figure_eight, 0, 1)
    assert S.V == figure_eight.transpose().V
    assert is_associate(alex(S.V), alex(figure_eight.V))


@pytest.mark.parametrize("V", [TREFOIL, FIGURE_EIGHT])
def test_parallel_intersection_form_unimodular(V):
    K = validate_knot_seifert(V)
    for p, n in [(1, 1), (2, 1), (3, 1), (2, 2), (1, 3)]:
        assert abs(int_det(intersection_form(parallel_link(K, p, n).V))) == 1


def test_orientation_vector():
    assert OrientationVector.standard(2, 1).signs == (1, 1, -1)
    with pytest.raises(ValueError):
        OrientationVector((1, 1), 1, 1)


def test_random_seifert_examples():
    assert random_seifert(0, 3, 1).V == ()
    assert random_seifert(1, 3, 42).V == random_seifert(1, 3, 42).V
    assert random_seifert(2, 3, 1).V != random_seifert(2, 3, 2).V


@given(st.integers(0, 3), st.integers(1, 4), st.integers(0, 10**6))
def test_random_seifert_is_valid(g, bound, seed):
    K = random_seifert(g, bound, seed)
    validate_knot_seifert(K.V)
    assert all(abs(x) <= bound + 1 for row in K.V for x in row)


@given(st.integers(0, 2), st.integers(1, 3), st.integers(0, 10**6))
def test_split_system_round_trip(g, r, seed):
    K = random_seifert(g, 3, seed)
    S = split_system(K, r)
    assert validate_boundary_system(S.to_list(), r) == S
    assert internal_band_sum(S).V == K.V
    form = intersection_form(S.V)
    assert all(form[i][j] == -form[j][i] for i in range(len(form)) for j in range(len(form)))
