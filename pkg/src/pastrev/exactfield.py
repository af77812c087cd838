"""Exact scalar fields: the rationals and the Gaussian rationals Q(i).

Rationals are plain :class:`fractions.Fraction` values.  A Gaussian rational
whose imaginary part vanishes is canonically demoted to a ``Fraction`` by
:func:`canon`, so structural equality of containers (polynomials, operators)
never depends on which of the two representations produced a value.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import DomainError

Rational = Fraction


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) or isinstance(other, _RationalABC):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / norm,
                                (self.im * o.re - self.re * o.im) / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return 1 / (self ** -k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[Fraction, GaussianRational]


def canon(value) -> Scalar:
    """Canonical representative of a field element (ints become Fractions)."""
    if isinstance(value, GaussianRational):
        return value.re if value.im == 0 else value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"not an exact field element: {value!r}")


def is_gaussian(value) -> bool:
    return isinstance(value, GaussianRational) and value.im != 0


def conj(z) -> Scalar:
    """Complex conjugate; the identity on rationals."""
    if isinstance(z, GaussianRational):
        return canon(z.conjugate())
    return canon(z)


_OPS = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b, "div": lambda a, b: a / b}


def field_arith(a, b, op: str) -> Scalar:
    """Exact ``a <op> b`` for op in add/sub/mul/div, returned in canonical form.

    Rational functions are accepted too; a scalar meeting one is lifted.
    """
    from .ratfunc import RationalFunc
    if isinstance(a, RationalFunc) or isinstance(b, RationalFunc):
        a, b = RationalFunc.lift(a), RationalFunc.lift(b)
        if op == "div" and b.is_zero():
            raise DomainError("division by zero")
        if op not in _OPS:
            raise ValueError(f"unknown field operation {op!r}")
        return _OPS[op](a, b)
    a, b = canon(a), canon(b)
    if op == "add":
        return canon(a + b)
    if op == "sub":
        return canon(a - b)
    if op == "mul":
        return canon(a * b)
    if op == "div":
        if b == 0:
            raise DomainError("division by zero")
        return canon(a / b)
    raise ValueError(f"unknown field operation {op!r}")


def sort_key(value) -> tuple[Fraction, Fraction]:
    """A total order on Q(i), used only to make canonical forms deterministic."""
    value = canon(value)
    if isinstance(value, GaussianRational):
        return (value.re, value.im)
    return (value, Fraction(0))


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(value) -> str:
    """Text form: ``p``, ``p/q``, ``a+bi``, ``a-bi``, ``bi``, ``i``."""
    value = canon(value)
    if isinstance(value, Fraction):
        return _format_rational(value)
    re, im = value.re, value.im
    mag = abs(im)
    imag = "i" if mag == 1 else _format_rational(mag) + "i"
    if re == 0:
        return ("-" if im < 0 else "") + imag
    return _format_rational(re) + ("-" if im < 0 else "+") + imag


I = GaussianRational(0, 1)
