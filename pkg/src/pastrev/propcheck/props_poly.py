"""Reversing, Pasting and (anti)palindromic structure of polynomials."""
from __future__ import annotations

from fractions import Fraction

from ..errors import VerificationError
from ..exactfield import canon
from ..poly import (FactoredLinear, Poly, Symmetry, cipher, classify, divides_at, expand,
                    paste, paste_fold, raw_coefficient_flip, reciprocal_conj, reverse,
                    reverse_factored, root_pairing)
from . import generators as gen
from .harness import ERRATUM, WITNESS, prop

PAL, ANTI = Symmetry.PALINDROMIC, Symmetry.ANTIPALINDROMIC


def _unit_poly(rng, max_deg=16):
    return gen.poly(rng, max_deg=max_deg, field=gen.pick_field(rng), unit_constant=True)


@prop("P1.1", "reverse(P)(t) = t^n P(1/t) with n + 1 = cipher(P)")
def inversion(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        field = gen.pick_field(rng)
        p = gen.poly(rng, field=field, unit_constant=True)
        r = reverse(p)
        n = cipher(p) - 1
        for _ in range(10):
            t = gen.scalar(rng, field, nonzero=True)
            want = canon(t ** n * p(1 / t))
            trial.check(r(t) == want, (p, t), want, r(t))


@prop("P1.2", "P(a) = 0 iff reverse(P)(1/a) = 0")
def root_reciprocity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        f = gen.factored(rng, max_deg=8, field=gen.pick_field(rng))
        p = expand(f)
        r = reverse(p)
        for rho in f.roots():
            trial.check(p(rho) == 0 and r(1 / rho) == 0, (p, rho), 0, (p(rho), r(1 / rho)))
        for _ in range(3):
            t = gen.rational(rng, nonzero=True)
            trial.check((p(t) == 0) == (r(1 / t) == 0), (p, t), "same vanishing",
                        (p(t), r(1 / t)))


@prop("P1.3", "reversing a product of linear factors swaps each factor and multiplies by (-1)^n")
def factored_reverse(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        f = gen.factored(rng, max_deg=8, field=gen.pick_field(rng))
        g = reverse_factored(f)
        trial.check(expand(g) == reverse(expand(f)), f.factors, reverse(expand(f)), expand(g))
        trial.check(reverse_factored(g) == f, f.factors, f, reverse_factored(g))


@prop("P1.4", "reverse(reverse(P)) = P")
def involution(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = _unit_poly(rng)
        trial.check(reverse(reverse(p)) == p, p, p, reverse(reverse(p)))


@prop("P1.5", "cipher(reverse(P)) = cipher(P)")
def cipher_preserved(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = _unit_poly(rng)
        trial.check(cipher(reverse(p)) == cipher(p), p, cipher(p), cipher(reverse(p)))


def _equal_cipher_pair(rng, field):
    """Two polynomials of one degree whose sum keeps both end coefficients."""
    d = rng.randint(0, 16)
    while True:
        p = gen.poly(rng, field=field, unit_constant=True, degree=d)
        q = gen.poly(rng, field=field, unit_constant=True, degree=d)
        s = p + q
        if not s.is_zero() and s.degree == d and s[0] != 0:
            return p, q


@prop("P1.6", "reverse(P + Q) = reverse(P) + reverse(Q) for equal ciphers")
def additivity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p, q = _equal_cipher_pair(rng, gen.pick_field(rng))
        lhs, rhs = reverse(p + q), reverse(p) + reverse(q)
        trial.check(lhs == rhs, (p, q), rhs, lhs)


@prop("P1.7", "reverse(P Q) = reverse(P) reverse(Q)")
def multiplicativity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        field = gen.pick_field(rng)
        p = gen.poly(rng, max_deg=10, field=field, unit_constant=True)
        q = gen.poly(rng, max_deg=10, field=field, unit_constant=True)
        lhs, rhs = reverse(p * q), reverse(p) * reverse(q)
        trial.check(lhs == rhs, (p, q), rhs, lhs)


@prop("P1.R", "without the x-does-not-divide-P hypothesis, root reciprocity and cipher "
      "preservation fail", cases=1, mode="fixed", kind=WITNESS)
def remark_witness(trial, rng, cases):
    trial.case()
    p = Poly((0, 1, 1))  # x^2 + x
    flipped = raw_coefficient_flip(p)
    broke_cipher = cipher(flipped) != cipher(p)
    # 0 is a root of p with no reciprocal, and the flip has fewer roots than p
    broke_roots = p(0) == 0 and flipped.degree < p.degree
    if broke_cipher:
        trial.discrepancy(p, f"cipher {cipher(p)}", f"flip {flipped} has cipher {cipher(flipped)}")
    if broke_roots:
        trial.discrepancy(p, "roots {0, -1}", f"flip {flipped} has roots {{-1}}; 0 has no reciprocal")
    trial.check(broke_cipher and broke_roots, p, "root reciprocity and cipher both broken", (broke_roots, broke_cipher))


@prop("P2", "roots of (anti)palindromic polynomials pair as reciprocals, with -1 / +1 "
      "forced by an even cipher", cases=200)
def root_pairs(trial, rng, cases):
    for i in range(cases):
        trial.case()
        anti = i % 2 == 1
        f = gen.factored_symmetric(rng, max_deg=12, anti=anti)
        p = expand(f)
        try:
            report = root_pairing(f)
        except VerificationError as exc:
            trial.check(False, f.factors, "reciprocal matching", str(exc))
            continue
        trial.check(report.symmetry is (ANTI if anti else PAL), p,
                    ANTI if anti else PAL, report.symmetry)
        for a, b in report.pairs:
            trial.check(canon(a * b) == 1, p, "reciprocal pair", (a, b))
        if cipher(p) % 2 == 0:
            want = (Fraction(1),) if anti else (Fraction(-1),)
            trial.check(report.unpaired == want, p, want, report.unpaired)
        covered = sorted(map(str, [r for pr in report.pairs for r in pr] + list(report.unpaired)))
        trial.check(covered == sorted(map(str, f.roots())), p, "every root accounted for", covered)


@prop("ERR-P2-ANTI", "literal reciprocal pairing fails for odd-cipher antipalindromic polynomials",
      cases=1, mode="fixed", kind=ERRATUM)
def pairing_erratum(trial, rng, cases):
    trial.case()
    f = FactoredLinear(1, ((1, 1), (1, -1)))  # x^2 - 1
    p = expand(f)
    roots = f.roots()
    literal_ok = canon(roots[1]) == canon(1 / roots[0])
    report = root_pairing(f)
    corrected_ok = report.pairs == () and set(report.unpaired) == {1, -1}
    if not literal_ok:
        trial.discrepancy(p, f"roots {roots[0]}, {roots[1]} are not reciprocal",
                          f"unpaired {list(report.unpaired)}")
    trial.check(not literal_ok and corrected_ok, p, "printed fails, corrected passes",
                (literal_ok, corrected_ok))


def _closure(trial, rng, cases, s1, s2, op, want):
    for _ in range(cases):
        trial.case()
        field = gen.pick_field(rng)
        if op == "add":
            d = rng.randint(1, 16)
            while True:
                p = gen.symmetric_poly(rng, d, s1 is ANTI, field)
                q = gen.symmetric_poly(rng, d, s2 is ANTI, field)
                r = p + q
                if r.degree == d:
                    break
        else:
            p = gen.symmetric_poly(rng, rng.randint(1 if s1 is ANTI else 0, 10), s1 is ANTI, field)
            q = gen.symmetric_poly(rng, rng.randint(1 if s2 is ANTI else 0, 10), s2 is ANTI, field)
            r = p * q
        if classify(p) is not s1 or classify(q) is not s2:
            trial.check(False, (p, q), (s1, s2), (classify(p), classify(q)))
            continue
        trial.check(classify(r) is want, (p, q), want.value, classify(r).value)


@prop("P3.1", "palindromic + palindromic (same degree) is palindromic")
def pal_add(trial, rng, cases):
    _closure(trial, rng, cases, PAL, PAL, "add", PAL)


@prop("P3.2", "palindromic * palindromic is palindromic")
def pal_mul(trial, rng, cases):
    _closure(trial, rng, cases, PAL, PAL, "mul", PAL)


@prop("P3.3", "antipalindromic + antipalindromic (same degree) is antipalindromic")
def anti_add(trial, rng, cases):
    _closure(trial, rng, cases, ANTI, ANTI, "add", ANTI)


@prop("P3.4", "antipalindromic * antipalindromic is palindromic")
def anti_mul(trial, rng, cases):
    _closure(trial, rng, cases, ANTI, ANTI, "mul", PAL)


@prop("P3.5", "palindromic * antipalindromic is antipalindromic")
def mixed_mul(trial, rng, cases):
    _closure(trial, rng, cases, PAL, ANTI, "mul", ANTI)


@prop("P4.1", "reverse(P) <> reverse(Q) = reverse(Q <> P)")
def paste_mixed(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p, q = _unit_poly(rng, 10), _unit_poly(rng, 10)
        lhs, rhs = paste(reverse(p), reverse(q)), reverse(paste(q, p))
        trial.check(lhs == rhs, (p, q), rhs, lhs)
        # independent expansion of the definition x^cipher(Q) P + Q
        trial.check(paste(q, p) == q * Poly.monomial(1, cipher(p)) + p, (q, p),
                    q * Poly.monomial(1, cipher(p)) + p, paste(q, p))


@prop("P4.2", "(P <> Q) <> R = P <> (Q <> R)")
def paste_assoc(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        field = gen.pick_field(rng)
        p, q, r = (gen.poly(rng, max_deg=8, field=field) for _ in range(3))
        lhs, rhs = paste(paste(p, q), r), paste(p, paste(q, r))
        trial.check(lhs == rhs, (p, q, r), rhs, lhs)
        ps = [gen.poly(rng, max_deg=5, field=field) for _ in range(rng.randint(1, 5))]
        right = ps[-1]
        for x in reversed(ps[:-1]):
            right = paste(x, right)
        trial.check(paste_fold(ps) == right, ps, right, paste_fold(ps))


@prop("P5", "P <> reverse(P) is palindromic and divisible by x + 1")
def paste_palindrome(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = _unit_poly(rng, 12)
        m = paste(p, reverse(p))
        trial.check(classify(m) is PAL, p, PAL.value, classify(m).value)
        trial.check(cipher(m) % 2 == 0, p, "even cipher", cipher(m))
        trial.check(divides_at(m, -1), p, 0, m(-1))
        q, r = m.divmod(Poly((1, 1)))
        trial.check(r.is_zero(), p, 0, r)


@prop("RC", "the conjugate reciprocal is an involution and equals Reversing on real coefficients")
def reciprocal(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = gen.poly(rng, max_deg=10, field="QI", unit_constant=True)
        trial.check(reciprocal_conj(reciprocal_conj(p)) == p, p, p,
                    reciprocal_conj(reciprocal_conj(p)))
        real = gen.poly(rng, max_deg=10, unit_constant=True)
        trial.check(reciprocal_conj(real) == reverse(real), real, reverse(real),
                    reciprocal_conj(real))
