"""Field and differential-ring axioms."""
from __future__ import annotations

from fractions import Fraction

from ..diffop import CONSTANTS, POLYNOMIALS
from ..exactfield import conj, field_arith
from ..ratfunc import RationalFunc
from . import generators as gen
from .harness import prop


def _ratfunc(rng):
    while True:
        den = gen.poly(rng, max_deg=3)
        if not den.is_zero():
            return RationalFunc(gen.poly(rng, max_deg=3), den)


def _axioms(trial, a, b, c, zero, one):
    ins = (a, b, c)
    trial.check(a + (b + c) == (a + b) + c, ins, "additive associativity", "violated")
    trial.check(zero + a == a and a + zero == a, ins, "additive identity", "violated")
    trial.check(a + (-a) == zero and (-a) + a == zero, ins, "additive inverse", "violated")
    trial.check(a + b == b + a, ins, "additive commutativity", "violated")
    trial.check((a * b) * c == a * (b * c), ins, "multiplicative associativity", "violated")
    trial.check(one * a == a and a * one == a, ins, "multiplicative identity", "violated")
    trial.check(a * (b + c) == a * b + a * c, ins, "left distributivity", "violated")
    trial.check((a + b) * c == a * c + b * c, ins, "right distributivity", "violated")


@prop("F.RING", "ring axioms hold exactly in Q, Q(i) and Q(x)", cases=300)
def ring_axioms(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        field = rng.choice(["Q", "QI", "QX"])
        if field == "QX":
            a, b, c = _ratfunc(rng), _ratfunc(rng), _ratfunc(rng)
            zero, one = RationalFunc(0), RationalFunc(1)
        else:
            a, b, c = (gen.scalar(rng, field) for _ in range(3))
            zero, one = Fraction(0), Fraction(1)
        _axioms(trial, a, b, c, zero, one)
        if field != "QX" and b != 0:
            q = field_arith(a, b, "div")
            trial.check(field_arith(q, b, "mul") == a, (a, b), a, field_arith(q, b, "mul"))


@prop("F.CONJ", "conjugation is an involutive field automorphism of Q(i)")
def conj_automorphism(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        a, b = gen.gaussian(rng), gen.gaussian(rng)
        trial.check(conj(conj(a)) == a, a, a, conj(conj(a)))
        trial.check(conj(a * b) == conj(a) * conj(b), (a, b), conj(a) * conj(b), conj(a * b))
        trial.check(conj(a + b) == conj(a) + conj(b), (a, b), conj(a) + conj(b), conj(a + b))


@prop("DR.LEIBNIZ", "d/dx is an additive Leibniz derivation; constants have zero derivation")
def leibniz(trial, rng, cases):
    d = POLYNOMIALS.derive
    for _ in range(cases):
        trial.case()
        a, b = gen.poly(rng, max_deg=6), gen.poly(rng, max_deg=6)
        trial.check(d(a + b) == d(a) + d(b), (a, b), d(a) + d(b), d(a + b))
        trial.check(d(a * b) == d(a) * b + a * d(b), (a, b), d(a) * b + a * d(b), d(a * b))
        z = gen.gaussian(rng)
        trial.check(CONSTANTS.derive(z) == 0, z, 0, CONSTANTS.derive(z))
