"""Seifert matrices of knots and block Seifert matrices of boundary links.

A boundary link with r components is described by a Seifert matrix N of
size r - 1 + 2g.  The first r - 1 basis curves are meridians of the tubes
joining the disjoint Seifert surfaces; they link everything trivially, so
the first r - 1 rows and columns of N vanish.  The remaining 2g x 2g block
V is the Seifert matrix of the knot obtained by banding the components
together along the tubes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadBlockPattern,
    BadClaspSign,
    EmptyLink,
    NotUnimodularIntersection,
    OddSize,
    SizeMismatch,
)
from .matrix import int_det

IntMatrix = tuple[tuple[int, ...], ...]


def _freeze(M: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in M)


def _transpose(M: IntMatrix) -> IntMatrix:
    return tuple(zip(*M)) if M else ()


def _check_square(M: IntMatrix) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise SizeMismatch(f"matrix with {n} rows is not square")
    return n


def intersection_form(V: IntMatrix) -> IntMatrix:
    """V - V^T."""
    n = len(V)
    return tuple(tuple(V[i][j] - V[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class KnotSeifert:
    """A 2g x 2g integer Seifert matrix with det(V - V^T) = 1."""

    V: IntMatrix
    g: int

    @property
    def size(self) -> int:
        return len(self.V)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.V]

    def transpose(self) -> KnotSeifert:
        return KnotSeifert(_transpose(self.V), self.g)


@dataclass(frozen=True)
class BoundarySeifertSystem:
    """Block Seifert matrix N = 0_(r-1) (+) V of an r-component boundary link."""

    r: int
    g: int
    N: IntMatrix

    @property
    def size(self) -> int:
        return len(self.N)

    @property
    def V(self) -> IntMatrix:
        k = self.r - 1
        return tuple(row[k:] for row in self.N[k:])

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.N]


@dataclass(frozen=True)
class OrientationVector:
    """Orientation signs of the p + n parallel copies, p copies +1 then n copies -1."""

    signs: tuple[int, ...]
    p: int
    n: int

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("orientation signs must be +1 or -1")
        if self.signs.count(1) != self.p or self.signs.count(-1) != self.n:
            raise ValueError("orientation signs do not match (p, n)")

    @classmethod
    def standard(cls, p: int, n: int) -> OrientationVector:
        return cls((1,) * p + (-1,) * n, p, n)


def validate_knot_seifert(V: Sequence[Sequence[int]]) -> KnotSeifert:
    """Check that V is the Seifert matrix of a knot.

    >>> validate_knot_seifert([[-1, 1], [0, -1]]).g
    1
    """
    V = _freeze(V)
    n = _check_square(V)
    if n % 2:
        raise OddSize(f"Seifert matrix of a knot has even size, got {n}")
    d = int_det(intersection_form(V))
    if d != 1:
        raise NotUnimodularIntersection(f"det(V - V^T) = {d}, expected 1")
    return KnotSeifert(V, n // 2)


def validate_boundary_system(N: Sequence[Sequence[int]], r: int) -> BoundarySeifertSystem:
    if r < 1:
        raise SizeMismatch(f"a link has at least one component, got r = {r}")
    N = _freeze(N)
    size = _check_square(N)
    rest = size - (r - 1)
    if rest < 0 or rest % 2:
        raise SizeMismatch(f"size {size} is not r - 1 + 2g for r = {r}")
    k = r - 1
    for i in range(size):
        for j in range(size):
            if (i < k or j < k) and N[i][j] != 0:
                raise BadBlockPattern(f"tube entry N[{i}][{j}] = {N[i][j]} must vanish")
    try:
        knot = validate_knot_seifert([row[k:] for row in N[k:]])
    except OddSize as exc:  # pragma: no cover - excluded by the size check above
        raise SizeMismatch(str(exc)) from exc
    return BoundarySeifertSystem(r, knot.g, N)


def split_system(K: KnotSeifert | Sequence[Sequence[int]], r: int) -> BoundarySeifertSystem:
    """The system 0_(r-1) (+) V."""
    V = K.V if isinstance(K, KnotSeifert) else _freeze(K)
    k = r - 1
    size = k + len(V)
    N = [[0] * size for _ in range(size)]
    for i, row in enumerate(V):
        for j, x in enumerate(row):
            N[k + i][k + j] = x
    return validate_boundary_system(N, r)


def internal_band_sum(S: BoundarySeifertSystem) -> KnotSeifert:
    """Seifert matrix of the knot obtained by banding along the tubes."""
    return KnotSeifert(S.V, S.g)


def _clasp(a: int) -> int:
    if a not in (1, -1):
        raise BadClaspSign(f"clasp sign must be +1 or -1, got {a}")
    return a


def whitehead_double_2(n: int, a1: int, a2: int) -> BoundarySeifertSystem:
    """Whitehead double of a 2-component link with linking number n."""
    a1, a2 = _clasp(a1), _clasp(a2)
    M = [
        [0, a1, n, n],
        [0, 0, n, n],
        [n, n, 0, a2],
        [n, n, 0, 0],
    ]
    return split_system(M, 2)


def whitehead_double_3(n1: int, n2: int, n3: int, a1: int, a2: int, a3: int) -> BoundarySeifertSystem:
    """Whitehead double of a 3-component link.

    ``n3`` couples the first and second clasp blocks, ``n2`` the first and
    third, ``n1`` the second and third.
    """
    a1, a2, a3 = _clasp(a1), _clasp(a2), _clasp(a3)
    M = [
        [0, a1, n3, n3, n2, n2],
        [0, 0, n3, n3, n2, n2],
        [n3, n3, 0, a2, n1, n1],
        [n3, n3, 0, 0, n1, n1],
        [n2, n2, n1, n1, 0, a3],
        [n2, n2, n1, n1, 0, 0],
    ]
    return split_system(M, 3)


def parallel_link(K: KnotSeifert, p: int, n: int) -> BoundarySeifertSystem:
    """The boundary system of P_{p,n}(K), p + n zero-framed parallel copies of K.

    Copies are ordered by push-off height, the p coherently oriented copies
    first.  With signs e_i, the block (i, j) of the big Seifert matrix is
    e_i e_j V above the diagonal, e_i e_j V^T below it, and V or V^T on the
    diagonal according to e_i.
    """
    if p < 0 or n < 0:
        raise ValueError("p and n must be nonnegative")
    if p + n < 1:
        raise EmptyLink("P_{0,0}(K) has no components")
    eps = OrientationVector.standard(p, n).signs
    V = K.V
    VT = _transpose(V)
    d = len(V)
    r = p + n
    big = [[0] * (d * r) for _ in range(d * r)]
    for bi in range(r):
        for bj in range(r):
            if bi == bj:
                block, s = (V if eps[bi] == 1 else VT), 1
            elif bi < bj:
                block, s = V, eps[bi] * eps[bj]
            else:
                block, s = VT, eps[bi] * eps[bj]
            for i in range(d):
                for j in range(d):
                    big[bi * d + i][bj * d + j] = s * block[i][j]
    return split_system(big, r)


def random_seifert(g: int, coeff_bound: int, seed: int) -> KnotSeifert:
    """Random Seifert matrix W + J_lower with W symmetric, deterministic per seed.

    J_lower is the strictly lower triangular part of the standard symplectic
    form, so V - V^T is the standard symplectic form itself.
    """
    if g < 0:
        raise ValueError("genus must be nonnegative")
    rng = random.Random(seed)
    n = 2 * g
    V = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            w = rng.randint(-coeff_bound, coeff_bound)
            V[i][j] = V[j][i] = w
    for k in range(g):
        V[2 * k + 1][2 * k] -= 1
    return validate_knot_seifert(V)
