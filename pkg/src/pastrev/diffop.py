"""Linear differential operators ``sum a_k D^k`` over a differential ring.

Two coefficient rings are provided: :data:`CONSTANTS` (Q(i), zero
derivation) and :data:`POLYNOMIALS` (polynomials with ``d/dx``).
Composition uses ``D a = a D + a'``, so it is non-commutative over
:data:`POLYNOMIALS`.  Kernel membership is decided exactly on exp-polynomials
``sum q_i(x) exp(s_i(x))``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from .errors import DomainError
from .exactfield import Scalar, canon, sort_key
from .poly import FactoredLinear, Poly, Symmetry, expand
from .ratfunc import RationalFunc


@dataclass(frozen=True, eq=False)
class DiffRing:
    name: str
    lift: Callable
    derive: Callable

    def __repr__(self):
        return f"DiffRing({self.name})"


def _lift_constant(value) -> Scalar:
    if isinstance(value, Poly):
        if not value.is_constant():
            raise DomainError(f"{value} is not a constant")
        return value[0]
    return canon(value)


def _lift_poly(value) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


CONSTANTS = DiffRing("constants", _lift_constant, lambda a: Fraction(0))
POLYNOMIALS = DiffRing("polynomials", _lift_poly, lambda a: a.derivative())


def as_poly(a) -> Poly:
    return a if isinstance(a, Poly) else Poly.constant(a)


class DiffOp:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: DiffRing, coeffs: Iterable = ()):
        cs = [ring.lift(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def D(cls, ring: DiffRing = POLYNOMIALS, k: int = 1) -> DiffOp:
        return cls(ring, [0] * k + [1])

    @classmethod
    def scalar(cls, ring: DiffRing, a) -> DiffOp:
        return cls(ring, [a])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other: DiffOp) -> None:
        if other.ring is not self.ring:
            raise DomainError(
                f"operators over {self.ring.name} and {other.ring.name} do not mix")

    def _lift(self, other) -> DiffOp | None:
        if isinstance(other, DiffOp):
            self._check(other)
            return other
        try:
            return DiffOp(self.ring, [other])
        except (TypeError, DomainError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DiffOp(self.ring, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.ring, [-c for c in self.coeffs])

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
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return op_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return op_mul(o, self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = DiffOp(self.ring, [1])
        for _ in range(k):
            out = op_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, DiffOp):
            return self.ring is other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f"DiffOp({self.ring.name}, {str(self)!r})"

    def __str__(self):
        from .grammar import format_op
        return format_op(self)


def _require_nonzero(*ops: DiffOp) -> None:
    for op in ops:
        if op.is_zero():
            raise DomainError("cipher is undefined for the zero operator")


def _require_unit_constant(op: DiffOp) -> None:
    _require_nonzero(op)
    if op.coeffs[0] == 0:
        raise DomainError(f"{op} has zero order-0 coefficient; Reversing needs a_0 != 0")


def op_cipher(op: DiffOp) -> int:
    _require_nonzero(op)
    return len(op.coeffs)


def op_add(a: DiffOp, b: DiffOp) -> DiffOp:
    a._check(b)
    return a + b


def op_mul(left: DiffOp, right: DiffOp) -> DiffOp:
    """Composition ``left o right`` in normal form ``sum c_k D^k``.

    ``D^i b = sum_k C(i, k) b^(k) D^(i-k)``.
    """
    left._check(right)
    ring = left.ring
    a, b = left.coeffs, right.coeffs
    if not a or not b:
        return DiffOp(ring)
    # derivs[j][k] = k-th derivative of b_j, for k <= order(left)
    derivs = []
    for bj in b:
        chain = [bj]
        for _ in range(len(a) - 1):
            nxt = ring.derive(chain[-1])
            if nxt == 0:
                break
            chain.append(nxt)
        derivs.append(chain)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, chain in enumerate(derivs):
            for k in range(min(i, len(chain) - 1) + 1):
                term = ai * chain[k]
                if k:
                    term = term * comb(i, k)
                out[i - k + j] = out[i - k + j] + term
    return DiffOp(ring, out)


def op_reverse(op: DiffOp) -> DiffOp:
    _require_unit_constant(op)
    return DiffOp(op.ring, reversed(op.coeffs))


def op_paste(left: DiffOp, right: DiffOp) -> DiffOp:
    """``left o D^cipher(right) + right``."""
    left._check(right)
    _require_nonzero(left, right)
    return DiffOp(left.ring, right.coeffs + left.coeffs)


def printed_op_paste(left: DiffOp, right: DiffOp) -> DiffOp:
    """``left o D^cipher(right) + left``: the variant whose tail repeats ``left``."""
    left._check(right)
    _require_nonzero(left, right)
    return op_mul(left, DiffOp.D(left.ring, len(right.coeffs))) + left


def op_paste_fold(ops) -> DiffOp:
    if not ops:
        raise DomainError("cannot paste an empty sequence")
    acc = ops[0]
    for op in ops[1:]:
        acc = op_paste(acc, op)
    return acc


def op_classify(op: DiffOp) -> Symmetry:
    r = op_reverse(op)
    if r == op:
        return Symmetry.PALINDROMIC
    if r == -op:
        return Symmetry.ANTIPALINDROMIC
    return Symmetry.NEITHER


def _poly_key(p: Poly):
    return (len(p.coeffs), tuple(sort_key(c) for c in p.coeffs))


class ExpPoly:
    """``sum q(x) * exp(s(x))`` over distinct exponents ``s``.

    Functions ``exp(s)`` for distinct polynomial ``s`` are linearly independent
    over Q(i)[x] (even when the exponents differ by a constant), so the
    canonical term list decides equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Poly, Poly]] = ()):
        acc: dict[Poly, Poly] = {}
        for q, s in terms:
            q, s = as_poly(q), as_poly(s)
            acc[s] = acc[s] + q if s in acc else q
        cleaned = [(q, s) for s, q in acc.items() if not q.is_zero()]
        cleaned.sort(key=lambda t: _poly_key(t[1]))
        object.__setattr__(self, "terms", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("ExpPoly is immutable")

    @classmethod
    def exp(cls, s, q=1) -> ExpPoly:
        return cls([(as_poly(q), as_poly(s))])

    @classmethod
    def poly(cls, q) -> ExpPoly:
        return cls([(as_poly(q), Poly())])

    def is_zero(self) -> bool:
        return not self.terms

    @staticmethod
    def _lift(other) -> ExpPoly | None:
        if isinstance(other, ExpPoly):
            return other
        try:
            return ExpPoly.poly(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExpPoly(self.terms + o.terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly((-q, s) for q, s in self.terms)

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
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExpPoly((q1 * q2, s1 + s2) for q1, s1 in self.terms for q2, s2 in o.terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ExpPoly.poly(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> ExpPoly:
        return ExpPoly((q.derivative() + q * s.derivative(), s) for q, s in self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"ExpPoly({str(self)!r})"

    def __str__(self):
        from .grammar import format_exppoly
        return format_exppoly(self)


def exp_witness(lam, j: int = 0) -> ExpPoly:
    """``x**j * exp(lam * x)``."""
    return ExpPoly.exp(Poly((0, lam)), Poly.monomial(1, j))


def apply(op: DiffOp, f: ExpPoly) -> ExpPoly:
    """``sum a_k f^(k)``."""
    out = ExpPoly()
    g = f
    for k, a in enumerate(op.coeffs):
        if k:
            g = g.derivative()
        if a != 0:
            out = out + g * as_poly(a)
    return out


def right_divide_monic_linear(op: DiffOp, c) -> tuple[DiffOp, object]:
    """Return ``(S, r)`` with ``op = S o (D + c) + r``; ``c`` is a constant.

    Because ``c`` commutes with ``D`` the coefficient of ``D^m`` in
    ``S o (D + c)`` is ``s_{m-1} + c s_m``, so the quotient is read off from
    the top down.
    """
    if op.is_zero() or op.order < 1:
        raise DomainError("right division by D + c needs an operator of order >= 1")
    c = canon(c)
    a = op.coeffs
    n = op.order
    s = [None] * n
    s[n - 1] = a[n]
    for k in range(n - 1, 0, -1):
        s[k - 1] = a[k] - s[k] * c
    r = a[0] - s[0] * c
    return DiffOp(op.ring, s), r


def char_poly(op: DiffOp) -> Poly:
    if op.ring is not CONSTANTS:
        raise DomainError("characteristic polynomial needs constant coefficients")
    return Poly(op.coeffs)


def op_from_char_poly(p: Poly) -> DiffOp:
    return DiffOp(CONSTANTS, p.coeffs)


def expand_op(f: FactoredLinear) -> DiffOp:
    """``unit * prod(beta D - alpha)`` over the constants."""
    return op_from_char_poly(expand(f))


def kernel_exponents(f: FactoredLinear) -> tuple[tuple[Scalar, int], ...]:
    """Exponents ``alpha/beta`` with multiplicity, sorted.

    Each ``(lam, m)`` gives ``x**j exp(lam x)`` in the kernel for ``j < m``.
    """
    if any(b == 0 for b, _ in f.factors):
        raise DomainError("kernel exponents need every beta nonzero")
    counts = Counter(f.roots())
    return tuple(sorted(counts.items(), key=lambda t: sort_key(t[0])))


def log_derivative_product(op: DiffOp) -> tuple[RationalFunc, RationalFunc, RationalFunc]:
    """For ``a_1 D + a_0``: ``(-a_0/a_1, -a_1/a_0, product)``.

    The first entry is the logarithmic derivative of a kernel element of the
    operator, the second that of its Reversing.
    """
    if len(op.coeffs) != 2:
        raise DomainError("log-derivative product needs an operator of order 1")
    a0, a1 = (RationalFunc(as_poly(c)) for c in op.coeffs)
    if a0.is_zero():
        raise DomainError("a_0 must be nonzero")
    u1 = -a0 / a1
    u2 = -a1 / a0
    return u1, u2, u1 * u2
