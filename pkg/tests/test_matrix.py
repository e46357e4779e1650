import random

import pytest
from hypothesis import given, strategies as st

from helpers import TREFOIL, lambda_matrices, random_hermitian, random_unimodular
from oracles import cofactor_det, numpy_signature
from zgenus.blanchfield import build_H
from zgenus.errors import NonUnitDeterminant
from zgenus.laurent import LaurentPoly, is_associate
from zgenus.matrix import (
    IntSymMatrix,
    LambdaMatrix,
    adjugate,
    congruence,
    det,
    eval_at_one,
    int_det,
    int_matmul,
    int_transpose,
    inverse_over_fractions,
    is_hermitian,
    rank_over_fractions,
    signature,
)
from zgenus.seifert import split_system, whitehead_double_2

P = LaurentPoly.parse
t = LaurentPoly.t()


def M(*rows):
    return LambdaMatrix([[P(x) if isinstance(x, str) else x for x in r] for r in rows])


# -- determinants ------------------------------------------------------


def test_det_examples():
    assert det(LambdaMatrix([])) == 1
    assert det(M(["t - 1", "t"], [-1, "t - 1"])) == P("t^2 - t + 1")
    # direct substitution into tV - V^T
    assert LambdaMatrix.presentation(TREFOIL) == M(["1 - t", "t"], [-1, "1 - t"])
    assert det(LambdaMatrix.presentation(TREFOIL)) == P("t^2 - t + 1")
    d = det(LambdaMatrix.presentation(whitehead_double_2(1, 1, 1).V))
    assert d.coeff(3) == 4 and d.coeff(4) == -1


@pytest.mark.parametrize("n", range(1, 6))
def test_det_matches_cofactor_expansion(n):
    rng = random.Random(n)
    for _ in range(4 if n < 5 else 2):
        A = LambdaMatrix([[LaurentPoly(rng.randint(-2, 1), [rng.randint(-3, 3) for _ in range(3)])
                           for _ in range(n)] for _ in range(n)])
        assert det(A) == cofactor_det([list(r) for r in A.rows])


@given(lambda_matrices(3, max_len=3, bound=3), lambda_matrices(3, max_len=3, bound=3))
def test_det_is_multiplicative(A, B):
    assert det(A @ B) == det(A) * det(B)


@given(lambda_matrices(3, max_len=3, bound=4))
def test_det_of_conjugate_transpose(A):
    assert det(A.conjugate_transpose()) == det(A).involute()
    assert det(A.transpose()) == det(A)


@given(lambda_matrices(3, max_len=3, bound=3))
def test_adjugate_identity(A):
    d = det(A)
    assert A @ adjugate(A) == LambdaMatrix.diagonal([d] * 3)


def test_inverse_over_fractions():
    A = M(["t - 1", "t"], [-1, "t - 1"])
    inv = inverse_over_fractions(A)
    for i in range(2):
        for j in range(2):
            s = sum((A[i, k] * inv[k][j] for k in range(2)), LaurentPoly())
            assert s == int(i == j)


# -- Hermitian structure and congruence --------------------------------


def test_is_hermitian_examples():
    assert is_hermitian(M(["t + t^-1 - 1"]))
    assert is_hermitian(M([0, "t"], ["t^-1", 0]))
    assert not is_hermitian(LambdaMatrix.presentation(TREFOIL))


def test_congruence_examples(rng):
    A = random_hermitian(rng, 2)
    assert congruence(A, LambdaMatrix.identity(2)) == A
    C = congruence(A, M([1, "t"], [0, 1]))
    assert is_hermitian(C)
    # direct expansion of P* A P for P = [[1, t], [0, 1]]
    a, b, d = A[0, 0], A[0, 1], A[1, 1]
    assert C[0, 0] == a
    assert C[0, 1] == a * t + b
    assert C[1, 1] == a + b.involute() * t + b * t.involute() + d
    with pytest.raises(NonUnitDeterminant):
        congruence(A, M([2, 0], [0, 1]))


def test_congruence_preserves_det_up_to_units():
    rng = random.Random(5)
    for _ in range(10):
        A = LambdaMatrix([[LaurentPoly(-1, [rng.randint(-2, 2) for _ in range(3)]) for _ in range(3)]
                          for _ in range(3)])
        U = LambdaMatrix(random_unimodular(rng, 3))
        assert is_associate(det(congruence(A, U)), det(A))


def test_hermitian_stays_hermitian_under_congruence(rng):
    for size in (1, 2, 3):
        A = random_hermitian(rng, size)
        U = LambdaMatrix(random_unimodular(rng, size)) @ LambdaMatrix.diagonal([t] * size)
        assert is_hermitian(congruence(A, U))


# -- evaluation and signature ------------------------------------------


def test_eval_at_one_examples():
    S = eval_at_one(M([0, "t"], ["t^-1", 0]))
    assert isinstance(S, IntSymMatrix) and S.to_list() == [[0, 1], [1, 0]]
    V = TREFOIL
    assert eval_at_one(LambdaMatrix.presentation(V)) == ((0, 1), (-1, 0))
    H = build_H(split_system(V, 2))
    assert eval_at_one(H).to_list() == [[0] * 3] * 3


def test_int_sym_matrix_rejects_asymmetry():
    with pytest.raises(ValueError):
        IntSymMatrix(((0, 1), (0, 0)))


def test_signature_examples():
    assert signature([[0, 1], [1, 0]]) == 0
    V = TREFOIL
    assert signature([[V[i][j] + V[j][i] for j in range(2)] for i in range(2)]) == -2
    assert signature([[0] * 3] * 3) == 0
    assert signature([]) == 0
    assert signature([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) == 0


def _rand_sym(rng, n, bound=3):
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(-bound, bound)
    return S


sym_seeds = st.integers(0, 10**6)


@given(sym_seeds, st.integers(0, 6))
def test_signature_matches_eigenvalues(seed, n):
    S = _rand_sym(random.Random(seed), n)
    assert signature(S) == numpy_signature(S)


@given(sym_seeds, st.integers(0, 4), st.integers(0, 4))
def test_signature_additive_and_odd(seed, n, m):
    rng = random.Random(seed)
    S, T = _rand_sym(rng, n), _rand_sym(rng, m)
    block = [r + [0] * m for r in S] + [[0] * n + r for r in T]
    assert signature(block) == signature(S) + signature(T)
    assert signature([[-x for x in r] for r in S]) == -signature(S)


@given(sym_seeds, st.integers(1, 6))
def test_signature_congruence_invariant(seed, n):
    rng = random.Random(seed)
    S = _rand_sym(rng, n)
    U = random_unimodular(rng, n)
    assert abs(int_det(U)) == 1
    assert signature(int_matmul(int_matmul(int_transpose(U), S), U)) == signature(S)


# -- rank --------------------------------------------------------------


def test_rank_examples():
    assert rank_over_fractions(LambdaMatrix.identity(3)) == 3
    N = split_system(TREFOIL, 2).N
    assert rank_over_fractions(LambdaMatrix.presentation(N)) == 2
    assert rank_over_fractions(LambdaMatrix.zero(2)) == 0
    assert rank_over_fractions(M([1, "t"], ["t", "t^2"])) == 1


@given(lambda_matrices(3, max_len=2, bound=2))
def test_rank_is_full_iff_det_nonzero(A):
    assert (rank_over_fractions(A) == 3) == (not det(A).is_zero())


# -- serialization -----------------------------------------------------


@given(lambda_matrices(2))
def test_json_round_trip(A):
    assert LambdaMatrix.from_json(A.to_json()) == A
