"""Dense univariate polynomials with Reversing and Pasting.

Coefficients are stored constant-term first, so ``coeffs[k]`` multiplies
``x**k``.  Under that layout Reversing is a sequence flip and Pasting
``x**cipher(Q) * P + Q`` is plain concatenation ``Q.coeffs + P.coeffs``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, VerificationError
from .exactfield import Scalar, canon, conj


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == Poly.constant(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        try:
            return Poly.constant(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = canon(other)
            except TypeError:
                return NotImplemented
            return Poly(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any exact scalar."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return canon(acc)

    def shift(self, k: int) -> Poly:
        """``x**k * self``."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> Poly:
        return Poly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        if divisor.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dl = len(dc)
        lead = dc[-1]
        if len(rem) < dl:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - dl + 1)
        for k in range(len(rem) - dl, -1, -1):
            q = rem[k + dl - 1] / lead
            quo[k] = q
            if q != 0:
                for j, d in enumerate(dc):
                    rem[k + j] -= q * d
        return Poly(quo), Poly(rem[: dl - 1])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def map_coeffs(self, f) -> Poly:
        return Poly(f(c) for c in self.coeffs)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def __str__(self):
        from .grammar import format_poly
        return format_poly(self)


class Symmetry(str, enum.Enum):
    PALINDROMIC = "palindromic"
    ANTIPALINDROMIC = "antipalindromic"
    NEITHER = "neither"


def _require_nonzero(*ps: Poly) -> None:
    for p in ps:
        if p.is_zero():
            raise DomainError("cipher is undefined for the zero polynomial")


def _require_unit_constant(p: Poly) -> None:
    _require_nonzero(p)
    if p.coeffs[0] == 0:
        raise DomainError(
            f"x divides {p}: Reversing requires a nonzero constant term")


def cipher(p: Poly) -> int:
    """Number of coefficients, ``deg(p) + 1``."""
    _require_nonzero(p)
    return len(p.coeffs)


def reverse(p: Poly) -> Poly:
    _require_unit_constant(p)
    return Poly(reversed(p.coeffs))


def raw_coefficient_flip(p: Poly) -> Poly:
    """Flip the coefficient sequence without the ``x does not divide P`` check."""
    _require_nonzero(p)
    return Poly(reversed(p.coeffs))


def paste(p: Poly, q: Poly) -> Poly:
    """``x**cipher(q) * p + q``."""
    _require_nonzero(p, q)
    return Poly(q.coeffs + p.coeffs)


def paste_fold(ps: Sequence[Poly]) -> Poly:
    if not ps:
        raise DomainError("cannot paste an empty sequence")
    acc = ps[0]
    _require_nonzero(acc)
    for p in ps[1:]:
        acc = paste(acc, p)
    return acc


def classify(p: Poly) -> Symmetry:
    r = reverse(p)
    if r == p:
        return Symmetry.PALINDROMIC
    if r == -p:
        return Symmetry.ANTIPALINDROMIC
    return Symmetry.NEITHER


def divides_at(p: Poly, c) -> bool:
    """True iff ``(x - c)`` divides ``p``."""
    return p(c) == 0


def reciprocal_conj(p: Poly) -> Poly:
    """Conjugate the coefficients, then reverse them."""
    _require_unit_constant(p)
    return Poly(conj(c) for c in reversed(p.coeffs))


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


@dataclass(frozen=True)
class FactoredLinear:
    """``unit * prod(beta*x - alpha for beta, alpha in factors)``."""

    unit: Scalar
    factors: tuple[tuple[Scalar, Scalar], ...] = ()

    def __post_init__(self):
        unit = canon(self.unit)
        if unit == 0:
            raise DomainError("factored form needs a nonzero unit")
        factors = tuple((canon(b), canon(a)) for b, a in self.factors)
        for b, a in factors:
            if b == 0 and a == 0:
                raise DomainError("linear factor 0*x - 0 is not allowed")
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "factors", factors)

    def roots(self) -> list[Scalar]:
        return [canon(a / b) for b, a in self.factors if b != 0]


def expand(f: FactoredLinear) -> Poly:
    out = Poly.constant(f.unit)
    for beta, alpha in f.factors:
        out = out * Poly((-alpha, beta))
    return out


def reverse_factored(f: FactoredLinear) -> FactoredLinear:
    if any(alpha == 0 for _, alpha in f.factors):
        raise DomainError("a factor beta*x - 0 makes x divide the product")
    sign = -1 if len(f.factors) % 2 else 1
    return FactoredLinear(f.unit * sign, tuple((a, b) for b, a in f.factors))


@dataclass(frozen=True)
class PairingReport:
    symmetry: Symmetry
    pairs: tuple[tuple[Scalar, Scalar], ...]
    unpaired: tuple[Scalar, ...]


def root_pairing(f: FactoredLinear) -> PairingReport:
    """Match the roots of a (anti)palindromic product into reciprocal pairs.

    The roots left over are forced by the cipher parity: ``-1`` for an even
    cipher palindromic polynomial, ``+1`` for an even cipher antipalindromic
    one, and both ``+1`` and ``-1`` for an odd cipher antipalindromic one
    (its middle coefficient vanishes, so ``x**2 - 1`` always divides it).
    """
    if any(b == 0 for b, _ in f.factors):
        raise DomainError("root pairing needs finite roots (all beta nonzero)")
    p = expand(f)
    sym = classify(p)
    if sym is Symmetry.NEITHER:
        raise DomainError(f"{p} is neither palindromic nor antipalindromic")
    even = cipher(p) % 2 == 0
    if sym is Symmetry.PALINDROMIC:
        forced = [Fraction(-1)] if even else []
    else:
        forced = [Fraction(1)] if even else [Fraction(-1), Fraction(1)]

    remaining = f.roots()
    for r in forced:
        try:
            remaining.remove(r)
        except ValueError:
            raise VerificationError(f"{p}: expected root {r} is missing") from None
    pairs = []
    while remaining:
        rho = remaining.pop(0)
        partner = canon(1 / rho)
        try:
            remaining.remove(partner)
        except ValueError:
            raise VerificationError(
                f"{p}: root {rho} has no reciprocal partner") from None
        pairs.append((rho, partner))
    return PairingReport(sym, tuple(pairs), tuple(forced))
