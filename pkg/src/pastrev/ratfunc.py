"""Rational functions over an exact field, kept reduced with monic denominator."""
from __future__ import annotations

from .errors import DomainError
from .poly import Poly, poly_gcd


class RationalFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        if den is None:
            den = Poly.constant(1)
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
            lead = den.leading
            if lead != 1:
                num, den = num * (1 / lead), den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunc is immutable")

    @classmethod
    def lift(cls, value) -> RationalFunc:
        if isinstance(value, RationalFunc):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = RationalFunc.lift(other)
        return RationalFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunc.lift(other))

    def __rsub__(self, other):
        return RationalFunc.lift(other) - self

    def __mul__(self, other):
        o = RationalFunc.lift(other)
        return RationalFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunc.lift(other)
        if o.is_zero():
            raise DomainError("division by the zero rational function")
        return RationalFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunc.lift(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunc(1) / self ** -k
        return RationalFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        try:
            o = RationalFunc.lift(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise DomainError("rational function evaluated at a pole")
        return self.num(value) / d

    def derivative(self) -> RationalFunc:
        return RationalFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                            self.den * self.den)

    def __repr__(self):
        return f"RationalFunc({str(self)!r})"

    def __str__(self):
        from .grammar import format_ratfunc
        return format_ratfunc(self)
