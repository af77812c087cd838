"""Seeded random generators for exact test instances.

Scalars have numerator and denominator drawn from [-9, 9] and [1, 9].
Symmetric objects are built by mirroring a random half, never by rejection.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ..diffop import CONSTANTS, POLYNOMIALS, DiffOp, DiffRing
from ..exactfield import GaussianRational, canon
from ..natnum import Numeral
from ..poly import FactoredLinear, Poly


def rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q or not nonzero:
            return q


def gaussian(rng: random.Random, nonzero: bool = False):
    while True:
        z = canon(GaussianRational(rational(rng), rational(rng)))
        if z != 0 or not nonzero:
            return z


def scalar(rng: random.Random, field: str = "Q", nonzero: bool = False):
    return gaussian(rng, nonzero) if field == "QI" else rational(rng, nonzero)


def pick_field(rng: random.Random, gaussian_share: float = 0.3) -> str:
    return "QI" if rng.random() < gaussian_share else "Q"


def poly(rng: random.Random, max_deg: int = 16, field: str = "Q",
         unit_constant: bool = False, degree: int | None = None) -> Poly:
    d = rng.randint(0, max_deg) if degree is None else degree
    cs = [scalar(rng, field) for _ in range(d + 1)]
    cs[-1] = scalar(rng, field, nonzero=True)
    if unit_constant:
        cs[0] = scalar(rng, field, nonzero=True)
    return Poly(cs)


def mirrored(half: list, degree: int, anti: bool) -> list:
    """Coefficient list of length ``degree + 1`` with ``c[k] = +-c[degree - k]``."""
    out = [None] * (degree + 1)
    for k in range(degree // 2 + 1):
        c = half[k]
        out[k] = c
        out[degree - k] = -c if anti else c
    if degree % 2 == 0 and anti:
        out[degree // 2] = 0 * out[degree // 2]
    return out


def symmetric_poly(rng: random.Random, degree: int, anti: bool = False,
                   field: str = "Q") -> Poly:
    if anti and degree == 0:
        raise ValueError("no antipalindromic constant exists")
    half = [scalar(rng, field) for _ in range(degree // 2 + 1)]
    half[0] = scalar(rng, field, nonzero=True)
    return Poly(mirrored(half, degree, anti))


def factored(rng: random.Random, max_deg: int = 8, field: str = "Q",
             nonzero_alpha: bool = True) -> FactoredLinear:
    d = rng.randint(0, max_deg)
    factors = [(scalar(rng, field, nonzero=True), scalar(rng, field, nonzero=nonzero_alpha))
               for _ in range(d)]
    return FactoredLinear(scalar(rng, field, nonzero=True), tuple(factors))


def factored_with_multiplicity(rng: random.Random, max_deg: int = 6) -> FactoredLinear:
    """Constant-coefficient factors with repeated exponents and no zero exponent."""
    d = rng.randint(1, max_deg)
    factors = []
    while len(factors) < d:
        beta, alpha = rational(rng, True), rational(rng, True)
        reps = min(rng.choice([1, 1, 2, 3]), d - len(factors))
        for _ in range(reps):
            s = rational(rng, True)
            factors.append((beta * s, alpha * s))
    rng.shuffle(factors)
    return FactoredLinear(rational(rng, True), tuple(factors))


def factored_symmetric(rng: random.Random, max_deg: int = 12,
                       anti: bool = False, even_cipher: bool | None = None) -> FactoredLinear:
    """Factored (anti)palindromic product of reciprocal pairs plus forced +-1 roots."""
    if even_cipher is None:
        even_cipher = rng.random() < 0.5
    forced = []
    if anti:
        forced = [(1, 1)] if even_cipher else [(1, 1), (1, -1)]
    elif even_cipher:
        forced = [(1, -1)]
    pairs = rng.randint(0, (max_deg - len(forced)) // 2)
    factors = []
    for _ in range(pairs):
        beta, alpha = rational(rng, True), rational(rng, True)
        if rng.random() < 0.15:
            alpha = rng.choice([beta, -beta])
        factors += [(beta, alpha), (alpha, beta)]
    for beta, alpha in forced:
        s = rational(rng, True)
        factors.append((beta * s, alpha * s))
    rng.shuffle(factors)
    return FactoredLinear(rational(rng, True), tuple(factors))


def ring_element(rng: random.Random, ring: DiffRing, coeff_deg: int = 3,
                 nonzero: bool = False, field: str = "Q"):
    if ring is CONSTANTS:
        return scalar(rng, field, nonzero)
    while True:
        p = poly(rng, max_deg=coeff_deg, field=field)
        if rng.random() < 0.2 and not nonzero:
            p = Poly()
        if not p.is_zero() or not nonzero:
            return p


def diffop(rng: random.Random, ring: DiffRing = POLYNOMIALS, max_order: int = 6,
           coeff_deg: int = 3, unit_constant: bool = True, order: int | None = None,
           field: str = "Q") -> DiffOp:
    n = rng.randint(0, max_order) if order is None else order
    cs = [ring_element(rng, ring, coeff_deg, field=field) for _ in range(n + 1)]
    cs[-1] = ring_element(rng, ring, coeff_deg, nonzero=True, field=field)
    if unit_constant:
        cs[0] = ring_element(rng, ring, coeff_deg, nonzero=True, field=field)
    return DiffOp(ring, cs)


def symmetric_diffop(rng: random.Random, order: int, anti: bool = False,
                     ring: DiffRing = POLYNOMIALS, coeff_deg: int = 3,
                     field: str = "Q") -> DiffOp:
    if anti and order == 0:
        raise ValueError("no antipalindromic operator of order 0 exists")
    half = [ring_element(rng, ring, coeff_deg, field=field) for _ in range(order // 2 + 1)]
    half[0] = ring_element(rng, ring, coeff_deg, nonzero=True, field=field)
    return DiffOp(ring, mirrored(half, order, anti))


def numeral(rng: random.Random, max_digits: int = 30, base: int = 10,
            trailing_nonzero: bool = False) -> Numeral:
    k = rng.randint(1, max_digits)
    digits = [rng.randrange(base) for _ in range(k)]
    if k > 1:
        digits[0] = rng.randrange(1, base)
    if trailing_nonzero:
        digits[-1] = rng.randrange(1, base)
    return Numeral(tuple(digits), base)


def base(rng: random.Random) -> int:
    return 10 if rng.random() < 0.6 else rng.randint(2, 36)
