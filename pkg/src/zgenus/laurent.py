"""Integer Laurent polynomials, the ring Z[t, t^-1].

A :class:`LaurentPoly` stores a valuation and a dense tuple of big-integer
coefficients starting at that valuation, trimmed at both ends.  The zero
polynomial has valuation 0 and no coefficients.

>>> t = LaurentPoly.t()
>>> (t + 1) * (t - 1)
LaurentPoly('-1 + 1*t^2')
>>> LaurentPoly.parse('-1*t^-1 + 2 + 1*t^3').involute()
LaurentPoly('1*t^-3 + 2 + -1*t^1')
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InexactDivision, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "UnitNormalization",
    "arith",
    "involute",
    "normalize_assoc",
    "is_associate",
    "eval_at_one",
    "poly_gcd",
]


def _trim(val: int, coeffs: list[int] | tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return val + lo, tuple(coeffs[lo:hi])


class LaurentPoly:
    """An immutable element of Z[t, t^-1]."""

    __slots__ = ("val", "coeffs", "_hash")

    def __init__(self, val: int = 0, coeffs: Iterable[int] = ()):
        v, c = _trim(int(val), [int(x) for x in coeffs])
        object.__setattr__(self, "val", v)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _raw(cls, val: int, coeffs: tuple[int, ...]) -> LaurentPoly:
        # caller guarantees coeffs are already trimmed
        obj = cls.__new__(cls)
        object.__setattr__(obj, "val", val if coeffs else 0)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {int(k): int(c) for k, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> LaurentPoly:
        return cls(k, (c,))

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls(1, (1,))

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- basic queries ------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Exponent to nonzero coefficient map."""
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_unit(self) -> bool:
        """True for the units of the ring, which are exactly +-t^k."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def is_constant(self) -> bool:
        return not self.coeffs or (self.val == 0 and len(self.coeffs) == 1)

    def valuation(self) -> int:
        return self.val

    def degree(self) -> int:
        """Top exponent; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return self.val + len(self.coeffs) - 1

    def width(self) -> int:
        """Span of exponents, degree minus valuation."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        i = k - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def trailing_coefficient(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.val, self.coeffs)))
        return self._hash

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.val, tuple(-c for c in self.coeffs))

    def __pos__(self) -> LaurentPoly:
        return self

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.val, other.val)
        hi = max(self.degree(), other.degree())
        out = [0] * (hi - lo + 1)
        off = self.val - lo
        for i, c in enumerate(self.coeffs):
            out[off + i] += c
        off = other.val - lo
        for i, c in enumerate(other.coeffs):
            out[off + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._raw(self.val, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        if len(a) == 1:
            c = a[0]
            return LaurentPoly._raw(self.val + other.val, tuple(c * x for x in b))
        if len(b) == 1:
            c = b[0]
            return LaurentPoly._raw(self.val + other.val, tuple(c * x for x in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(self.val + other.val, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_unit():
                raise InexactDivision(f"{self} is not a unit")
            return LaurentPoly.monomial(self.coeffs[0], -self.val) ** (-k)
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly._raw(self.val + k, self.coeffs) if self.coeffs else self

    def involute(self) -> LaurentPoly:
        """Apply t -> t^-1."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.degree(), self.coeffs[::-1])

    def subs_power(self, w: int) -> LaurentPoly:
        """Apply t -> t^w."""
        if w == 0:
            return LaurentPoly.constant(sum(self.coeffs))
        return LaurentPoly.from_terms(_accumulate((w * k, c) for k, c in self.terms.items()))

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, x):
        """Evaluate at a number; uses exact rationals when the valuation is negative."""
        from fractions import Fraction

        if self.val < 0 and isinstance(x, int):
            x = Fraction(x)
        return sum(c * x ** (self.val + i) for i, c in enumerate(self.coeffs) if c)

    # -- division -----------------------------------------------------

    def divmod_poly(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Division with remainder by a divisor with +-1 leading and trailing coefficients.

        The remainder has all exponents in ``[other.val, other.degree())``.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        lead, trail = other.leading_coefficient(), other.trailing_coefficient()
        if lead not in (1, -1) or trail not in (1, -1):
            raise InexactDivision("divisor needs unit leading and trailing coefficients")
        q = LaurentPoly()
        r = self
        top = other.degree()
        while r.coeffs and r.degree() >= top:
            m = LaurentPoly.monomial(r.leading_coefficient() * lead, r.degree() - top)
            q, r = q + m, r - m * other
        while r.coeffs and r.val < other.val:
            m = LaurentPoly.monomial(r.trailing_coefficient() * trail, r.val - other.val)
            q, r = q + m, r - m * other
        return q, r

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact quotient in Z[t, t^-1]; raises InexactDivision otherwise."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return self
        q = _exact_div_dense(self.coeffs, other.coeffs)
        if q is None:
            raise InexactDivision(f"{other} does not divide {self}")
        return LaurentPoly(self.val - other.val, q)

    def divides(self, other: LaurentPoly) -> bool:
        if not self.coeffs:
            return not other.coeffs
        if not other.coeffs:
            return True
        return _exact_div_dense(other.coeffs, self.coeffs) is not None

    def primitive_part(self) -> LaurentPoly:
        g = self.content()
        if g == 0:
            return self
        return LaurentPoly._raw(self.val, tuple(c // g for c in self.coeffs))

    def canonical(self) -> LaurentPoly:
        """Associate with valuation 0 and positive constant term."""
        return normalize_assoc(self).canonical

    # -- text ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.terms.items():
            parts.append(str(c) if k == 0 else f"{c}*t^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def pretty(self) -> str:
        """Compact rendering for human-readable output, e.g. ``t^2 - t + 1``."""
        if not self.coeffs:
            return "0"
        out = []
        for k, c in sorted(self.terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the ``c*t^k`` syntax produced by :meth:`__str__`.

        Also accepts the looser forms ``t``, ``-t^2``, ``3t^-1`` and ``a - b``.
        """
        s = text.replace(" ", "").replace("**", "^")
        s = s.replace("+-", "-").replace("-+", "-").replace("--", "+")
        if not s:
            raise ValueError("empty polynomial string")
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
                raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
            if pos > 0 and not m.group("sign"):
                raise ValueError(f"missing operator in {text!r} at position {pos}")
            pos = m.end()
            c = int(m.group("coef")) if m.group("coef") is not None else 1
            if m.group("sign") == "-":
                c = -c
            if m.group("var") is None:
                k = 0
            else:
                k = int(m.group("exp")) if m.group("exp") is not None else 1
            terms[k] = terms.get(k, 0) + c
        return cls.from_terms(terms)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coef>\d+)\*?)?"
    r"(?:(?P<var>t)(?:\^(?P<exp>[+-]?\d+))?)?"
)


def _accumulate(pairs) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, c in pairs:
        out[k] = out.get(k, 0) + c
    return out


def _exact_div_dense(a: tuple[int, ...], b: tuple[int, ...]) -> list[int] | None:
    """Quotient of dense integer polynomials a / b if exact over Z, else None."""
    n, m = len(a), len(b)
    if m > n:
        return None
    rem = list(a)
    lead = b[-1]
    q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = rem[i + m - 1]
        if c:
            qi, r = divmod(c, lead)
            if r:
                return None
            q[i] = qi
            for j in range(m):
                rem[i + j] -= qi * b[j]
    if any(rem[: m - 1]):
        return None
    return q


@dataclass(frozen=True)
class UnitNormalization:
    """``p = sign * t^shift * canonical`` with canonical in normal form."""

    canonical: LaurentPoly
    sign: int
    shift: int


def normalize_assoc(p: LaurentPoly) -> UnitNormalization:
    """Factor out the unit +-t^k so the rest has valuation 0 and positive constant term.

    >>> normalize_assoc(LaurentPoly.parse('-t^3 + t^2'))
    UnitNormalization(canonical=LaurentPoly('1 + -1*t^1'), sign=1, shift=2)
    """
    if not p.coeffs:
        raise ZeroPolynomial("the zero polynomial has no canonical associate")
    sign = 1 if p.coeffs[0] > 0 else -1
    coeffs = p.coeffs if sign == 1 else tuple(-c for c in p.coeffs)
    return UnitNormalization(LaurentPoly._raw(0, coeffs), sign, p.val)


def is_associate(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff p = +-t^k q for some k; two zeros count as associates."""
    if not p.coeffs or not q.coeffs:
        return not p.coeffs and not q.coeffs
    return normalize_assoc(p).canonical == normalize_assoc(q).canonical


def involute(p: LaurentPoly) -> LaurentPoly:
    return p.involute()


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


# -- gcd over Q[t] --------------------------------------------------------


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # dense ascending coefficient lists, deg a >= deg b, b nonzero
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _primitive(c: list[int]) -> list[int]:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    if g == 0:
        return c
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor over Q, as a primitive canonical associate.

    Units of Z[t, t^-1] and rational constants are ignored, so
    ``poly_gcd(2*(t-1), 4*t*(t-1))`` is ``t - 1`` in canonical form.
    """
    if not p.coeffs:
        return q.primitive_part().canonical() if q.coeffs else LaurentPoly()
    if not q.coeffs:
        return p.primitive_part().canonical()
    a, b = _primitive(list(p.coeffs)), _primitive(list(q.coeffs))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, (_primitive(r) if r else [])
    return LaurentPoly(0, _primitive(a)).canonical()
