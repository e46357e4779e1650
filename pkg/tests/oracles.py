"""Independent oracles used to freeze expected values.

These deliberately avoid the package's own algorithms: determinants by
cofactor expansion or sympy, substitutions by sympy, signatures by numpy
eigenvalues.
"""

import numpy as np
import sympy

from zgenus.laurent import LaurentPoly

T = sympy.Symbol("t")


def to_sympy(p: LaurentPoly):
    return sum((c * T**k for k, c in p.terms.items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    terms = {}
    for term, coeff in expr.as_coefficients_dict().items():
        if term == 1:
            k = 0
        elif term == T:
            k = 1
        else:
            base, k = term.as_base_exp()
            assert base == T, term
        terms[int(k)] = terms.get(int(k), 0) + int(coeff)
    return LaurentPoly.from_terms(terms)


def cofactor_det(rows):
    """Laplace expansion along the first row; rows hold LaurentPoly entries."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.constant(1)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def sympy_alexander(V):
    """det(tV - V^T) computed by sympy."""
    n = len(V)
    if n == 0:
        return LaurentPoly.constant(1)
    M = sympy.Matrix(n, n, lambda i, j: T * V[i][j] - V[j][i])
    return from_sympy(M.det(method="berkowitz"))


def substitute_power(p: LaurentPoly, w: int) -> LaurentPoly:
    """p(t^w) via sympy substitution."""
    return from_sympy(to_sympy(p).subs(T, T**w))


def numpy_signature(S) -> int:
    if len(S) == 0:
        return 0
    ev = np.linalg.eigvalsh(np.array(S, dtype=float))
    return int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))
