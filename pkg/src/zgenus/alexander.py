"""Alexander polynomials and the torsion/free splitting of Alexander modules."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateTorsionBlock
from .laurent import LaurentPoly
from .matrix import LambdaMatrix, det, rank_over_fractions
from .seifert import BoundarySeifertSystem, KnotSeifert

_ONE = LaurentPoly.constant(1)

WEAKLY_SLICE_COMPATIBLE = "weakly-slice-compatible"
OBSTRUCTED = "obstructed"


@dataclass(frozen=True)
class PresentedModule:
    """The Λ-module coker(P) of a square presentation matrix P.

    The first ``declared_free_rows`` rows and columns of P vanish, so these
    generators span a free summand.
    """

    P: LambdaMatrix
    declared_free_rows: int = 0

    def __post_init__(self):
        k = self.declared_free_rows
        if k < 0 or k > self.P.n:
            raise ValueError(f"declared_free_rows = {k} out of range")
        for i in range(self.P.n):
            for j in range(self.P.n):
                if (i < k or j < k) and not self.P[i, j].is_zero():
                    raise ValueError("free rows and columns must be zero")

    def torsion_block(self) -> LambdaMatrix:
        k = self.declared_free_rows
        return self.P.submatrix(range(k, self.P.n))


@dataclass(frozen=True)
class TorsionDecomposition:
    free_rank: int
    torsion_presentation: LambdaMatrix
    order: LaurentPoly

    def is_trivial(self) -> bool:
        return self.order == _ONE


def alexander_polynomial(K: KnotSeifert) -> LaurentPoly:
    """Canonical associate of det(tV - V^T).

    >>> from zgenus.seifert import validate_knot_seifert
    >>> alexander_polynomial(validate_knot_seifert([[-1, 1], [0, -1]])).pretty()
    't^2 - t + 1'
    """
    return det(LambdaMatrix.presentation(K.V)).canonical()


def symmetrized_alexander(K: KnotSeifert) -> LaurentPoly:
    """t^-g det(tV - V^T), the representative fixed by t -> t^-1."""
    return det(LambdaMatrix.presentation(K.V)).shift(-K.g)


def presentation(S: BoundarySeifertSystem) -> PresentedModule:
    """tN - N^T, presenting H_1 of the link exterior with Λ coefficients."""
    return PresentedModule(LambdaMatrix.presentation(S.N), S.r - 1)


def torsion_decomposition(M: PresentedModule) -> TorsionDecomposition:
    A = M.torsion_block()
    if rank_over_fractions(A) < A.n:
        raise DegenerateTorsionBlock("the torsion block has determinant zero")
    d = det(A)
    return TorsionDecomposition(M.declared_free_rows, A, d.canonical())


def is_torsion_free(M: PresentedModule) -> str:
    """``"weakly-slice-compatible"`` iff the torsion order is a unit, else ``"obstructed"``."""
    return WEAKLY_SLICE_COMPATIBLE if torsion_decomposition(M).is_trivial() else OBSTRUCTED


def ln_family_module(n: int) -> PresentedModule:
    """Λ (+) Λ/((n-1)t - n) (+) Λ/(nt - (n-1)), the Alexander module of L_n."""
    return PresentedModule(
        LambdaMatrix.diagonal([LaurentPoly(), LaurentPoly(0, (-n, n - 1)), LaurentPoly(0, (-(n - 1), n))]),
        1,
    )


