"""Shared generators for the test suite."""

from hypothesis import strategies as st

from zgenus.laurent import LaurentPoly
from zgenus.matrix import LambdaMatrix, det
from zgenus.seifert import validate_knot_seifert

TREFOIL = [[-1, 1], [0, -1]]
FIGURE_EIGHT = [[-1, 1], [0, 1]]


def laurent_polys(max_len=5, lo=-3, hi=3, bound=6):
    return st.builds(
        lambda val, coeffs: LaurentPoly(val, coeffs),
        st.integers(lo, hi),
        st.lists(st.integers(-bound, bound), max_size=max_len),
    )


nonzero_polys = laurent_polys().filter(lambda p: not p.is_zero())


def lambda_matrices(n, **kw):
    return st.lists(st.lists(laurent_polys(**kw), min_size=n, max_size=n), min_size=n, max_size=n).map(LambdaMatrix)


def self_conjugate(rng, degree=1, bound=2):
    c = [rng.randint(-bound, bound) for _ in range(degree + 1)]
    terms = {0: c[0]}
    for k in range(1, degree + 1):
        terms[k] = terms.get(k, 0) + c[k]
        terms[-k] = terms.get(-k, 0) + c[k]
    return LaurentPoly.from_terms(terms)


def random_poly(rng, degree=1, bound=2):
    return LaurentPoly(-degree, [rng.randint(-bound, bound) for _ in range(2 * degree + 1)])


def random_hermitian(rng, size, degree=1, bound=2):
    """A random Hermitian matrix over Λ with nonzero determinant."""
    while True:
        rows = [[LaurentPoly()] * size for _ in range(size)]
        for i in range(size):
            rows[i][i] = self_conjugate(rng, degree, bound)
            for j in range(i + 1, size):
                p = random_poly(rng, degree, bound)
                rows[i][j], rows[j][i] = p, p.involute()
        A = LambdaMatrix(rows)
        if not det(A).is_zero():
            return A


def random_unimodular(rng, n, steps=8):
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return P
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        s = rng.choice((1, -1))
        for row in P:
            row[j] += s * row[i]
    return P


