"""Algebraic genus search and Z-genus bounds.

The algebraic genus of a knot is the minimum of m - n over Seifert matrices
of size 2m that contain a 2n x 2n block A with det(tA - A^T) = t^n.  Such
a block is the Seifert form restricted to a rank 2n sublattice, so the
search looks for sublattices rather than for whole matrices: principal
coordinate subsets first, then all pairs of short vectors (size 4), then
random walks of elementary unimodular congruences (size 6 and up).

Reports are honest bounds.  The lower bound comes from the Alexander
polynomial (nontrivial means genus >= 1) and from the classical signature
bound; ``exact`` is set when it meets the best upper bound found.
Stabilizations of V are never searched.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Sequence

from .alexander import alexander_polynomial
from .blanchfield import CertificateReport, HermitianPresentation, verify_certificate
from .laurent import LaurentPoly
from .matrix import LambdaMatrix, det, int_det, int_matmul, int_transpose, signature
from .seifert import BoundarySeifertSystem, KnotSeifert, internal_band_sum, parallel_link

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchBudget:
    coeff_bound: int = 1
    max_candidates: int = 2000
    degree_bound: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.coeff_bound < 1 or self.max_candidates < 1 or self.degree_bound < 0:
            raise ValueError("budget entries must be positive")


@dataclass(frozen=True)
class GenusReport:
    lower: int
    upper: int
    exact: bool
    witness_basis: IntMatrix | None = None
    witness_block: IntMatrix | None = None
    witness_hermitian: LambdaMatrix | None = None
    budget_exhausted: bool = False
    invariant: str = "g_alg"
    candidates: int = 0
    checks: dict = field(default_factory=dict, compare=False)

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    def relabel(self, invariant: str) -> GenusReport:
        return GenusReport(
            self.lower,
            self.upper,
            self.exact,
            self.witness_basis,
            self.witness_block,
            self.witness_hermitian,
            self.budget_exhausted,
            invariant,
            self.candidates,
            dict(self.checks),
        )

    def to_json(self) -> dict:
        witness = None
        if self.witness_basis is not None:
            witness = {
                "basis": [list(r) for r in self.witness_basis],
                "block": [list(r) for r in self.witness_block or ()],
                "block_size": len(self.witness_block or ()),
            }
        if self.witness_hermitian is not None:
            witness = dict(witness or {}, hermitian=self.witness_hermitian.to_json())
        out = {
            "invariant": self.invariant,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness": witness,
            "budget_exhausted": self.budget_exhausted,
        }
        if self.checks:
            out["checks"] = self.checks
        return out


# -- helpers -----------------------------------------------------------


def is_alexander_trivial_block(A: Sequence[Sequence[int]]) -> bool:
    """det(tA - A^T) = t^n for a 2n x 2n integer matrix A."""
    size = len(A)
    if size % 2:
        return False
    n = size // 2
    if size == 0:
        return True
    if size == 2:
        (a, b), (c, d) = A
        # det = (ad - bc) t^2 + ((b - c)^2 - 2(ad - bc)) t + (ad - bc)
        return a * d == b * c and abs(b - c) == 1
    # cheap necessary condition at t = 2 before the exact determinant
    if int_det([[2 * A[i][j] - A[j][i] for j in range(size)] for i in range(size)]) != 2**n:
        return False
    return det(LambdaMatrix.presentation(A)) == LaurentPoly.monomial(1, n)


def _restrict(V, X_cols: Sequence[Sequence[int]]) -> list[list[int]]:
    """X^T V X for the matrix X with the given columns."""
    VX = [[sum(V[i][k] * x[k] for k in range(len(x))) for i in range(len(V))] for x in X_cols]
    return [[sum(x[i] * vx[i] for i in range(len(x))) for vx in VX] for x in X_cols]


def complete_to_unimodular(cols: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """A unimodular dim x dim matrix whose first columns are ``cols``.

    The columns must span a primitive sublattice of Z^dim.
    """
    k = len(cols)
    X = [[cols[j][i] for j in range(k)] for i in range(dim)]
    Uinv = [[int(i == j) for j in range(dim)] for i in range(dim)]

    def swap(i, j):
        X[i], X[j] = X[j], X[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def sub(i, j, q):
        # row_i -= q row_j, tracked on the inverse as col_j += q col_i
        X[i] = [a - q * b for a, b in zip(X[i], X[j])]
        for row in Uinv:
            row[j] += q * row[i]

    for c in range(k):
        while True:
            nz = [r for r in range(c, dim) if X[r][c] != 0]
            if not nz:
                raise ValueError("columns are linearly dependent")
            piv = min(nz, key=lambda r: abs(X[r][c]))
            if piv != c:
                swap(piv, c)
            done = True
            for r in range(c + 1, dim):
                if X[r][c]:
                    sub(r, c, X[r][c] // X[c][c])
                    if X[r][c]:
                        done = False
            if done:
                break
    H = [row[:k] for row in X[:k]]
    if abs(int_det(H)) != 1:
        raise ValueError("columns do not span a primitive sublattice")
    # P = Uinv * diag(H, I)
    D = [[(H[i][j] if i < k and j < k else int(i == j)) for j in range(dim)] for i in range(dim)]
    P = int_matmul(Uinv, D)
    assert all(P[i][j] == cols[j][i] for j in range(k) for i in range(dim))
    return P


def _lower_bound(K: KnotSeifert, delta: LaurentPoly) -> int:
    if delta == 1:
        return 0
    V = K.V
    sym = [[V[i][j] + V[j][i] for j in range(len(V))] for i in range(len(V))]
    return max(1, math.ceil(abs(signature(sym)) / 2))


def _short_vectors(dim: int, bound: int) -> list[tuple[int, ...]]:
    vecs = [v for v in itertools.product(range(-bound, bound + 1), repeat=dim) if any(v)]
    vecs.sort(key=lambda v: (max(map(abs, v)), sum(map(abs, v)), [-x for x in v]))
    return vecs


# -- the search --------------------------------------------------------


def algebraic_genus(K: KnotSeifert, budget: SearchBudget | None = None) -> GenusReport:
    budget = budget or SearchBudget()
    V = [list(r) for r in K.V]
    dim, m = len(V), K.g
    delta = alexander_polynomial(K)
    lower = _lower_bound(K, delta)

    best_n = 0
    best_cols: list[tuple[int, ...]] = []
    candidates = 0
    exhausted = False

    def record(cols, n):
        nonlocal best_n, best_cols
        best_n, best_cols = n, [tuple(c) for c in cols]

    if delta == 1:
        record([tuple(int(i == j) for i in range(dim)) for j in range(dim)], m)

    # principal coordinate blocks, largest first
    if m - best_n > lower:
        for n in range(m - 1, best_n, -1):
            hit = next(
                (s for s in itertools.combinations(range(dim), 2 * n)
                 if is_alexander_trivial_block([[V[i][j] for j in s] for i in s])),
                None,
            )
            if hit is not None:
                record([tuple(int(i == j) for i in range(dim)) for j in hit], n)
                break

    if m - best_n > lower and m == 2:
        # every rank 2 sublattice spanned by vectors with entries up to coeff_bound
        vecs = _short_vectors(dim, budget.coeff_bound)
        rows = [[sum(x[i] * V[i][j] for i in range(dim)) for j in range(dim)] for x in vecs]
        diag = [sum(r[j] * x[j] for j in range(dim)) for r, x in zip(rows, vecs)]
        found = False
        for a in range(len(vecs)):
            ra, xa = rows[a], vecs[a]
            for b in range(a + 1, len(vecs)):
                candidates += 1
                if candidates > budget.max_candidates:
                    exhausted = True
                    break
                xb, rb = vecs[b], rows[b]
                ab = sum(p * q for p, q in zip(ra, xb))
                ba = sum(p * q for p, q in zip(rb, xa))
                if diag[a] * diag[b] == ab * ba and abs(ab - ba) == 1:
                    record([xa, xb], 1)
                    found = True
                    break
            if found or exhausted:
                break

    if m - best_n > lower and m >= 3:
        rng = random.Random(budget.seed)
        P = None
        for step in range(budget.max_candidates):
            if step % 12 == 0:
                P = [[int(i == j) for j in range(dim)] for i in range(dim)]
            i, j = rng.sample(range(dim), 2)
            s = rng.choice((1, -1))
            for row in P:
                row[j] += s * row[i]
            candidates += 1
            W = int_matmul(int_matmul(int_transpose(P), V), P)
            for n in range(m - 1, best_n, -1):
                hit = next(
                    (sub for sub in itertools.combinations(range(dim), 2 * n)
                     if is_alexander_trivial_block([[W[a][b] for b in sub] for a in sub])),
                    None,
                )
                if hit is not None:
                    record([tuple(P[r][c] for r in range(dim)) for c in hit], n)
                    break
            if m - best_n <= lower:
                break
        else:
            exhausted = True

    upper = m - best_n
    if best_cols:
        basis = complete_to_unimodular(best_cols, dim)
        block = _restrict(V, best_cols)
        # re-verify the witness from scratch before reporting it
        if abs(int_det(basis)) != 1 or not is_alexander_trivial_block(block):
            raise AssertionError("genus witness failed re-verification")
        witness = tuple(tuple(r) for r in basis)
        wblock = tuple(tuple(r) for r in block)
    else:
        witness = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
        wblock = ()
    exact = upper == lower
    return GenusReport(
        lower=lower,
        upper=upper,
        exact=exact,
        witness_basis=witness,
        witness_block=wblock,
        budget_exhausted=exhausted and not exact,
        candidates=candidates,
    )


def z_genus_knot(K: KnotSeifert, budget: SearchBudget | None = None) -> GenusReport:
    """The Z-genus of a knot, which coincides with its algebraic genus."""
    return algebraic_genus(K, budget).relabel("g_Z")


def z_genus_link(S: BoundarySeifertSystem, budget: SearchBudget | None = None) -> GenusReport:
    """Z-genus of a boundary link via the band sum along the tubes."""
    return z_genus_knot(internal_band_sum(S), budget).relabel("g_Z(link)")


def weakly_slice_verdict(report: GenusReport) -> str:
    if report.upper == 0:
        return "yes"
    if report.lower >= 1:
        return "no"
    return "unknown"


def shake_genus(K: KnotSeifert, budget: SearchBudget | None = None, max_ell: int = 1) -> GenusReport:
    """The Z-shake genus, equal to the Z-genus.

    Also computes the link bounds for P_{l+1,l}(K), l = 0..max_ell, and
    records whether their upper bounds agree with the knot's.
    """
    base = z_genus_knot(K, budget)
    checks = {}
    for ell in range(max_ell + 1):
        rep = z_genus_link(parallel_link(K, ell + 1, ell), budget)
        checks[f"P_{ell + 1},{ell}"] = {
            "lower": rep.lower,
            "upper": rep.upper,
            "exact": rep.exact,
            "agrees": rep.upper == base.upper,
        }
    out = base.relabel("g_Z^sh")
    out.checks.update(checks)
    return out


# -- Hermitian presentations -------------------------------------------


@dataclass(frozen=True)
class HermitianHit:
    presentation: HermitianPresentation
    report: CertificateReport
    candidates: int


def _self_conjugate(coeffs: Sequence[int]) -> LaurentPoly:
    # coeffs[0] + sum coeffs[k] (t^k + t^-k)
    D = len(coeffs) - 1
    terms = {0: coeffs[0]}
    for k in range(1, D + 1):
        terms[k] = terms.get(k, 0) + coeffs[k]
        terms[-k] = terms.get(-k, 0) + coeffs[k]
    return LaurentPoly.from_terms(terms)


def _general(coeffs: Sequence[int]) -> LaurentPoly:
    D = (len(coeffs) - 1) // 2
    return LaurentPoly(-D, coeffs)


def _hermitian_from(diag_coeffs, off_coeffs, size) -> LambdaMatrix:
    rows = [[LaurentPoly()] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = _self_conjugate(diag_coeffs[i])
    k = 0
    for i in range(size):
        for j in range(i + 1, size):
            p = _general(off_coeffs[k])
            rows[i][j], rows[j][i] = p, p.involute()
            k += 1
    return LambdaMatrix(rows)


def find_hermitian_presentation(
    K: KnotSeifert, genus: int, budget: SearchBudget | None = None
) -> HermitianHit | None:
    """Search for a 2g x 2g Hermitian A with det(A) = Δ_K up to units and sign(A(1)) = 0.

    Entries have exponents in [-degree_bound, degree_bound] and coefficients
    bounded by coeff_bound.  Size 2 is enumerated exhaustively, simplest
    matrices first; larger sizes are sampled at random.  ``None`` only
    means the budget ran out, not that no presentation exists.
    """
    budget = budget or SearchBudget()
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    delta = alexander_polynomial(K)
    size = 2 * genus
    if size == 0:
        if delta != 1:
            return None
        A = LambdaMatrix([])
        return HermitianHit(HermitianPresentation(A), verify_certificate(A, K, 0), 0)

    C, D = budget.coeff_bound, budget.degree_bound
    rng_c = range(-C, C + 1)
    n_off = size * (size - 1) // 2

    def check(A: LambdaMatrix) -> bool:
        d = det(A)
        if d.is_zero() or d.canonical() != delta:
            return False
        return verify_certificate(A, K, genus).verdict == "pass"

    candidates = 0
    if size == 2:
        diag_opts = list(itertools.product(rng_c, repeat=D + 1))
        off_opts = list(itertools.product(rng_c, repeat=2 * D + 1))
        weight = lambda c: sum(map(abs, c))  # noqa: E731
        combos = sorted(
            itertools.product(range(len(diag_opts)), range(len(diag_opts)), range(len(off_opts))),
            key=lambda ijk: (
                weight(diag_opts[ijk[0]]) + weight(diag_opts[ijk[1]]) + weight(off_opts[ijk[2]]),
                ijk,
            ),
        )
        for i, j, k in combos:
            candidates += 1
            if candidates > budget.max_candidates:
                return None
            A = _hermitian_from([diag_opts[i], diag_opts[j]], [off_opts[k]], 2)
            if check(A):
                return HermitianHit(HermitianPresentation(A), verify_certificate(A, K, genus), candidates)
        return None

    rng = random.Random(budget.seed)
    for _ in range(budget.max_candidates):
        candidates += 1
        diag = [[rng.choice(rng_c) for _ in range(D + 1)] for _ in range(size)]
        off = [[rng.choice(rng_c) for _ in range(2 * D + 1)] for _ in range(n_off)]
        A = _hermitian_from(diag, off, size)
        if check(A):
            return HermitianHit(HermitianPresentation(A), verify_certificate(A, K, genus), candidates)
    return None
