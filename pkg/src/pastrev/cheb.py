"""Chebyshev polynomials of the first kind and the half-degree reduction of
odd-cipher palindromic polynomials.

For palindromic ``P`` of degree ``2n`` and ``w = (z + 1/z)/2``::

    P(z) / (2 z**n) = a_n/2 + sum_{k=1..n} a_{n-k} T_k(w)

The constant slot carries ``a_n/2``; :func:`printed_expansion` builds the
variant with ``a_n`` there instead, kept only so the mismatch can be shown.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactfield import Scalar, canon
from .poly import Poly, Symmetry, classify

_T_TABLE: list[Poly] = [Poly.constant(1), Poly.x()]
_T_LOCK = threading.Lock()


def cheb_T(n: int) -> Poly:
    """``T_n`` via ``T_{n+1} = 2w T_n - T_{n-1}``."""
    if n < 0:
        raise DomainError("Chebyshev index must be nonnegative")
    if n >= len(_T_TABLE):
        with _T_LOCK:
            two_w = Poly((0, 2))
            while len(_T_TABLE) <= n:
                _T_TABLE.append(two_w * _T_TABLE[-1] - _T_TABLE[-2])
    return _T_TABLE[n]


@dataclass(frozen=True)
class ChebExpansion:
    """``sum(coeffs[k] * T_k(w))``."""

    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(canon(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, w) -> Scalar:
        return canon(sum((c * cheb_T(k)(w) for k, c in enumerate(self.coeffs)), Fraction(0)))

    def to_poly(self) -> Poly:
        """The expansion as an ordinary polynomial in ``w``."""
        out = Poly()
        for k, c in enumerate(self.coeffs):
            out = out + cheb_T(k) * c
        return out


def _odd_cipher_palindromic(p: Poly) -> int:
    if classify(p) is not Symmetry.PALINDROMIC:
        raise DomainError(f"{p} is not palindromic")
    if p.degree % 2:
        raise DomainError(f"{p} has even cipher; the reduction needs degree 2n")
    return p.degree // 2


def palindromic_to_cheb(p: Poly) -> ChebExpansion:
    n = _odd_cipher_palindromic(p)
    a = p.coeffs
    return ChebExpansion((a[n] / 2,) + tuple(a[n - k] for k in range(1, n + 1)))


def printed_expansion(p: Poly) -> ChebExpansion:
    """Coefficients with the middle coefficient itself (not halved) on ``T_0``."""
    n = _odd_cipher_palindromic(p)
    return ChebExpansion(tuple(p.coeffs[n - k] for k in range(n + 1)))


def cheb_to_palindromic(c: ChebExpansion) -> Poly:
    if not c.coeffs:
        raise DomainError("empty Chebyshev expansion")
    if c.coeffs[-1] == 0:
        raise DomainError("top Chebyshev coefficient must be nonzero")
    n = c.n
    a = [Fraction(0)] * (2 * n + 1)
    a[n] = 2 * c.coeffs[0]
    for k in range(1, n + 1):
        a[n - k] = a[n + k] = c.coeffs[k]
    return Poly(a)
