"""Square matrices over Λ = Z[t, t^-1] and exact integer symmetric forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonUnitDeterminant
from .laurent import LaurentPoly
from .rational import RationalFunction

_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)

Row = tuple[LaurentPoly, ...]


class LambdaMatrix:
    """Immutable dense n x n matrix with Laurent polynomial entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable] = ()):
        rows = tuple(tuple(LaurentPoly.coerce(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LambdaMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> LambdaMatrix:
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> LambdaMatrix:
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> LambdaMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def presentation(cls, V: Sequence[Sequence[int]]) -> LambdaMatrix:
        """The matrix t*V - V^T of an integer square matrix V."""
        n = len(V)
        return cls(
            [[LaurentPoly(0, (-V[j][i], V[i][j])) for j in range(n)] for i in range(n)]
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"LambdaMatrix({self.to_json()!r})"

    def transpose(self) -> LambdaMatrix:
        return LambdaMatrix(zip(*self.rows)) if self.rows else self

    def involute(self) -> LambdaMatrix:
        return LambdaMatrix([[x.involute() for x in row] for row in self.rows])

    def conjugate_transpose(self) -> LambdaMatrix:
        """Transpose combined with t -> t^-1 on every entry."""
        return self.involute().transpose()

    def __add__(self, other: LambdaMatrix) -> LambdaMatrix:
        return LambdaMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: LambdaMatrix) -> LambdaMatrix:
        return LambdaMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> LambdaMatrix:
        return LambdaMatrix([[-a for a in r] for r in self.rows])

    def __matmul__(self, other: LambdaMatrix) -> LambdaMatrix:
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c)), _ZERO) for c in cols])
        return LambdaMatrix(out)

    def scale(self, p) -> LambdaMatrix:
        p = LaurentPoly.coerce(p)
        return LambdaMatrix([[p * a for a in r] for r in self.rows])

    def apply(self, v: Sequence) -> list[LaurentPoly]:
        """Matrix times a column vector."""
        v = [LaurentPoly.coerce(x) for x in v]
        return [sum((a * b for a, b in zip(r, v)), _ZERO) for r in self.rows]

    def minor_matrix(self, i: int, j: int) -> LambdaMatrix:
        return LambdaMatrix(
            [r[:j] + r[j + 1 :] for k, r in enumerate(self.rows) if k != i]
        )

    def submatrix(self, idx: Sequence[int]) -> LambdaMatrix:
        return LambdaMatrix([[self.rows[i][j] for j in idx] for i in idx])

    def block_diag(self, other: LambdaMatrix) -> LambdaMatrix:
        a, b = self.n, other.n
        rows = [list(r) + [_ZERO] * b for r in self.rows]
        rows += [[_ZERO] * a + list(r) for r in other.rows]
        return LambdaMatrix(rows)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> LambdaMatrix:
        return cls([[LaurentPoly.coerce(x) for x in r] for r in data])

    def pretty(self) -> str:
        cells = [[x.pretty() for x in r] for r in self.rows]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(w) for c in r) + " ]" for r in cells)

    # -- algebra ------------------------------------------------------

    def det(self) -> LaurentPoly:
        return det(self)

    def is_hermitian(self) -> bool:
        return is_hermitian(self)

    def eval_at_one(self):
        return eval_at_one(self)

    def adjugate(self) -> LambdaMatrix:
        return adjugate(self)


def det(M: LambdaMatrix) -> LaurentPoly:
    """Determinant by Bareiss fraction-free elimination; det of the 0 x 0 matrix is 1."""
    n = M.n
    if n == 0:
        return _ONE
    a = [list(r) for r in M.rows]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                x = row_i[j] * pivot - lead * row_k[j]
                row_i[j] = x.exact_div(prev) if prev != _ONE else x
            row_i[k] = _ZERO
        prev = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def rank_over_fractions(M: LambdaMatrix) -> int:
    """Rank over Q(t), via fraction-free row echelon form."""
    a = [list(r) for r in M.rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    prev = _ONE
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, nrows):
            lead = a[i][col]
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * pivot - lead * a[rank][j]).exact_div(prev)
            a[i][col] = _ZERO
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def adjugate(M: LambdaMatrix) -> LambdaMatrix:
    """Classical adjoint, so that M @ adj(M) = det(M) * I."""
    n = M.n
    if n == 0:
        return M
    if n == 1:
        return LambdaMatrix([[_ONE]])
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            d = det(M.minor_matrix(i, j))
            cof[j][i] = -d if (i + j) % 2 else d
    return LambdaMatrix(cof)


def inverse_over_fractions(M: LambdaMatrix) -> list[list[RationalFunction]]:
    """Inverse over Q(t) as adj(M)/det(M)."""
    d = det(M)
    adj = adjugate(M)
    return [[RationalFunction(x, d) for x in r] for r in adj.rows]


def is_hermitian(M: LambdaMatrix) -> bool:
    n = M.n
    return all(M.rows[i][j] == M.rows[j][i].involute() for i in range(n) for j in range(i, n))


def congruence(M: LambdaMatrix, P: LambdaMatrix) -> LambdaMatrix:
    """Basis change P* M P, where P* is the conjugate transpose."""
    if P.n != M.n:
        raise ValueError("size mismatch in congruence")
    if not det(P).is_unit():
        raise NonUnitDeterminant(f"det(P) = {det(P)} is not a unit")
    return P.conjugate_transpose() @ M @ P


# -- integer matrices ---------------------------------------------------


@dataclass(frozen=True)
class IntSymMatrix:
    """A symmetric matrix of Python integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        e = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", e)
        n = len(e)
        for i in range(n):
            if len(e[i]) != n:
                raise ValueError("matrix is not square")
            for j in range(i):
                if e[i][j] != e[j][i]:
                    raise ValueError("matrix is not symmetric")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def eval_at_one(M: LambdaMatrix):
    """Substitute t = 1 entrywise.

    Returns an :class:`IntSymMatrix` when the result is symmetric (always the
    case for Hermitian input), otherwise a tuple of integer rows.
    """
    rows = tuple(tuple(x.eval_at_one() for x in r) for r in M.rows)
    n = len(rows)
    if all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i)):
        return IntSymMatrix(rows)
    return rows


def signature(S) -> int:
    """Signature of a symmetric integer (or rational) matrix, computed exactly.

    Diagonalizes by simultaneous row and column operations over Q.  A zero
    diagonal with a nonzero off-diagonal entry is split off as a hyperbolic
    2 x 2 block, which contributes 0.

    >>> signature([[-2, 1], [1, -2]])
    -2
    >>> signature([[0, 1], [1, 0]])
    0
    """
    if isinstance(S, IntSymMatrix):
        S = S.entries
    a = [[Fraction(x) for x in r] for r in S]
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("signature needs a symmetric matrix")
    sig = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i] != 0), None)
        if p is not None:
            d = a[p][p]
            sig += 1 if d > 0 else -1
            rest = [i for i in range(n) if i != p]
            a = [[a[i][j] - a[i][p] * a[p][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = a[i0][j0]
        rest = [k for k in range(n) if k not in pair]
        # Schur complement against [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]]
        a = [
            [a[k][l] - (a[k][i0] * a[j0][l] + a[k][j0] * a[i0][l]) / b for l in rest]
            for k in rest
        ]
    return sig


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def int_matmul(A, B) -> list[list[int]]:
    cols = list(zip(*B))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in A]


def int_transpose(A) -> list[list[int]]:
    return [list(c) for c in zip(*A)]
