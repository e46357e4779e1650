"""Rational functions Q(t) and their classes in Q(t)/Λ and Q(t)/Λ_S.

Here Λ = Z[t, t^-1] and Λ_S = Z[t, t^-1, (t-1)^-1].  A fraction is kept
reduced: numerator and denominator share no common factor over Q, no common
integer content, and the denominator has valuation 0 and a positive
constant term.  That makes the stored pair unique for each element of Q(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroDenominator
from .laurent import LaurentPoly, poly_gcd

LAMBDA = "Lambda"
LAMBDA_S = "Lambda_S"
_AMBIENTS = (LAMBDA, LAMBDA_S)
_ONE = LaurentPoly.constant(1)
_T_MINUS_ONE = LaurentPoly(0, (-1, 1))


def _as_poly(x) -> LaurentPoly:
    return LaurentPoly.coerce(x)


class RationalFunction:
    """An element num/den of Q(t) with integral Laurent numerator and denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("denominator is zero")
        if num.is_zero():
            num, den = LaurentPoly(), _ONE
        else:
            num, den = num.shift(-den.val), den.shift(-den.val)
            g = poly_gcd(num, den)
            if not g.is_unit():
                num, den = num.exact_div(g), den.exact_div(g)
            c = math.gcd(num.content(), den.content())
            if den.coeffs[0] < 0:
                c = -c
            if c != 1:
                num = LaurentPoly._raw(num.val, tuple(x // c for x in num.coeffs))
                den = LaurentPoly._raw(den.val, tuple(x // c for x in den.coeffs))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def coerce(cls, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        return cls(x)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, LaurentPoly)):
                return NotImplemented
            other = RationalFunction(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        if not isinstance(other, (RationalFunction, int, LaurentPoly)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other) -> RationalFunction:
        return (-self) + other

    def __mul__(self, other) -> RationalFunction:
        if not isinstance(other, RationalFunction):
            if not isinstance(other, (int, LaurentPoly)):
                return NotImplemented
            other = RationalFunction(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = RationalFunction.coerce(other)
        if other.is_zero():
            raise ZeroDenominator("division by zero")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.coerce(other) / self

    def involute(self) -> RationalFunction:
        return RationalFunction(self.num.involute(), self.den.involute())

    def is_laurent(self) -> bool:
        """Membership in Λ."""
        return self.den == _ONE

    def localized_denominator(self) -> LaurentPoly:
        """The denominator with every factor of (t - 1) divided out."""
        den = self.den
        while _T_MINUS_ONE.divides(den):
            den = den.exact_div(_T_MINUS_ONE)
        return den

    def is_localized(self) -> bool:
        """Membership in Λ_S."""
        return self.localized_denominator().is_unit()

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction('{self.num}', '{self.den}')"


@dataclass(frozen=True, eq=False)
class ResidueClass:
    """The class of ``rep`` in Q(t)/Λ or Q(t)/Λ_S."""

    rep: RationalFunction
    ambient: str = LAMBDA

    def __post_init__(self):
        if self.ambient not in _AMBIENTS:
            raise ValueError(f"unknown ambient ring {self.ambient!r}")

    def is_zero(self) -> bool:
        if self.ambient == LAMBDA:
            return self.rep.is_laurent()
        return self.rep.is_localized()

    def _check(self, other: ResidueClass) -> None:
        if self.ambient != other.ambient:
            raise ValueError("residues live in different quotients")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueClass):
            return NotImplemented
        self._check(other)
        return ResidueClass(self.rep - other.rep, self.ambient).is_zero()

    __hash__ = None  # equality is modulo a subring, no canonical hash

    def __add__(self, other: ResidueClass) -> ResidueClass:
        self._check(other)
        return ResidueClass(self.rep + other.rep, self.ambient)

    def __sub__(self, other: ResidueClass) -> ResidueClass:
        self._check(other)
        return ResidueClass(self.rep - other.rep, self.ambient)

    def __neg__(self) -> ResidueClass:
        return ResidueClass(-self.rep, self.ambient)

    def __mul__(self, p) -> ResidueClass:
        if isinstance(p, (int, LaurentPoly)):
            return ResidueClass(self.rep * p, self.ambient)
        if isinstance(p, RationalFunction) and self.ambient == LAMBDA_S and p.is_localized():
            return ResidueClass(self.rep * p, self.ambient)
        return NotImplemented

    __rmul__ = __mul__

    def involute(self) -> ResidueClass:
        return ResidueClass(self.rep.involute(), self.ambient)

    def reduced(self) -> ResidueClass:
        """A smaller representative of the same class, when one is computable.

        Over Λ, a numerator is reduced modulo a denominator whose extreme
        coefficients are +-1; other classes are returned unchanged.
        """
        if self.ambient != LAMBDA or self.rep.is_laurent():
            return ResidueClass(RationalFunction(0), self.ambient) if self.is_zero() else self
        den = self.rep.den
        if den.leading_coefficient() in (1, -1) and den.trailing_coefficient() in (1, -1):
            _, r = self.rep.num.divmod_poly(den)
            return ResidueClass(RationalFunction(r, den), self.ambient)
        return self

    def __str__(self) -> str:
        ring = "Λ" if self.ambient == LAMBDA else "Λ_S"
        rep = self.reduced().rep
        return f"({rep.num})/({rep.den}) (mod {ring})"

    def __repr__(self) -> str:
        return f"ResidueClass({self})"


def residue(f, ambient: str = LAMBDA) -> ResidueClass:
    """Class of a fraction modulo Λ (``"Lambda"``) or Λ_S (``"Lambda_S"``)."""
    if isinstance(f, tuple):
        f = RationalFunction(*f)
    return ResidueClass(RationalFunction.coerce(f), ambient)
