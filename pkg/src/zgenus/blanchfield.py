"""Presented Blanchfield pairings and Conway's localized linking form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .alexander import alexander_polynomial, symmetrized_alexander
from .errors import DegenerateTorsionBlock, SingularPresentation
from .laurent import LaurentPoly, is_associate
from .matrix import IntSymMatrix, LambdaMatrix, adjugate, det, eval_at_one, is_hermitian, signature
from .rational import LAMBDA, LAMBDA_S, RationalFunction, ResidueClass
from .seifert import BoundarySeifertSystem, KnotSeifert, internal_band_sum

_ZERO = LaurentPoly()


@dataclass(frozen=True)
class HermitianPresentation:
    """A Hermitian matrix A over Λ with det(A) != 0."""

    A: LambdaMatrix
    _adj: LambdaMatrix = field(init=False, repr=False, compare=False)
    _det: LaurentPoly = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.A, LambdaMatrix):
            object.__setattr__(self, "A", LambdaMatrix(self.A))
        if not is_hermitian(self.A):
            raise ValueError("presentation matrix is not Hermitian")
        # pairing uses A(t^-1), the entrywise involution of A
        B = self.A.involute()
        d = det(B)
        if d.is_zero():
            raise SingularPresentation("det(A) = 0")
        object.__setattr__(self, "_adj", adjugate(B))
        object.__setattr__(self, "_det", d)

    @property
    def n(self) -> int:
        return self.A.n


def _vec(v: Sequence) -> list[LaurentPoly]:
    return [LaurentPoly.coerce(x) for x in v]


def pair(A: HermitianPresentation | LambdaMatrix, v: Sequence, w: Sequence) -> ResidueClass:
    """v^T A(t^-1)^-1 conj(w) in Q(t)/Λ."""
    if not isinstance(A, HermitianPresentation):
        A = HermitianPresentation(A)
    v, w = _vec(v), _vec(w)
    if len(v) != A.n or len(w) != A.n:
        raise ValueError(f"vectors must have length {A.n}")
    wbar = [x.involute() for x in w]
    adj_w = A._adj.apply(wbar)
    num = sum((a * b for a, b in zip(v, adj_w)), _ZERO)
    return ResidueClass(RationalFunction(num, A._det), LAMBDA)


def build_H(S: BoundarySeifertSystem) -> LambdaMatrix:
    """(1 - t) N + (1 - t^-1) N^T."""
    one_minus_t = LaurentPoly(0, (1, -1))
    one_minus_tinv = LaurentPoly(-1, (-1, 1))
    N = S.N
    n = len(N)
    return LambdaMatrix(
        [[one_minus_t * N[i][j] + one_minus_tinv * N[j][i] for j in range(n)] for i in range(n)]
    )


def conway_pair(S: BoundarySeifertSystem, v: Sequence, w: Sequence) -> ResidueClass:
    """-(1/Δ²) v^T H conj(w) in Q(t)/Λ_S, with Δ = t^-g det(tV - V^T).

    Entries of v and w may be Laurent polynomials or elements of Λ_S given as
    :class:`RationalFunction` values.
    """
    delta = symmetrized_alexander(internal_band_sum(S))
    if delta.is_zero():
        raise DegenerateTorsionBlock("torsion order vanishes")
    H = build_H(S)
    v = [RationalFunction.coerce(x) for x in v]
    w = [RationalFunction.coerce(x) for x in w]
    if len(v) != H.n or len(w) != H.n:
        raise ValueError(f"vectors must have length {H.n}")
    total = RationalFunction(0)
    for i in range(H.n):
        if v[i].is_zero():
            continue
        for j in range(H.n):
            h = H[i, j]
            if h.is_zero() or w[j].is_zero():
                continue
            total = total + v[i] * h * w[j].involute()
    value = -total / RationalFunction(delta * delta)
    return ResidueClass(value, LAMBDA_S)


@dataclass(frozen=True)
class CertificateReport:
    """Machine-checkable necessary conditions for a genus-g Hermitian presentation.

    ``verdict`` is ``"pass"`` when every check holds.  Isometry with the
    Blanchfield form itself is not decided, see ``isometry_checked``.
    """

    hermitian_ok: bool
    size: int
    claimed_genus: int
    size_ok: bool
    det_matches_order: bool
    signature_at_one: int | None
    verdict: str
    isometry_checked: bool = False

    def to_json(self) -> dict:
        return {
            "hermitian": self.hermitian_ok,
            "size": self.size,
            "claimed_genus": self.claimed_genus,
            "size_ok": self.size_ok,
            "det_matches_order": self.det_matches_order,
            "signature_at_one": self.signature_at_one,
            "verdict": self.verdict,
            "isometry_checked": self.isometry_checked,
        }


def verify_certificate(
    A: HermitianPresentation | LambdaMatrix, K: KnotSeifert, claimed_genus: int
) -> CertificateReport:
    if isinstance(A, HermitianPresentation):
        A = A.A
    herm = is_hermitian(A)
    size_ok = A.n == 2 * claimed_genus
    d = det(A)
    order_ok = not d.is_zero() and is_associate(d, alexander_polynomial(K))
    at_one = eval_at_one(A)
    sig = signature(at_one) if isinstance(at_one, IntSymMatrix) else None
    ok = herm and size_ok and order_ok and sig == 0
    return CertificateReport(herm, A.n, claimed_genus, size_ok, order_ok, sig, "pass" if ok else "fail")
