"""Reversing, Pasting, right division and kernels of differential operators."""
from __future__ import annotations

from fractions import Fraction

from ..diffop import (CONSTANTS, POLYNOMIALS, DiffOp, ExpPoly, apply, as_poly, char_poly,
                      expand_op, exp_witness, kernel_exponents, log_derivative_product,
                      op_classify, op_cipher, op_mul, op_paste, op_reverse,
                      printed_op_paste, right_divide_monic_linear)
from ..exactfield import canon
from ..poly import FactoredLinear, Poly, Symmetry, classify, paste, reverse, reverse_factored
from ..poly import root_pairing
from ..ratfunc import RationalFunc
from . import generators as gen
from .harness import ERRATUM, prop

PAL, ANTI = Symmetry.PALINDROMIC, Symmetry.ANTIPALINDROMIC


def checked_division(trial, op: DiffOp, c, expect_zero: bool | None = None):
    """Divide by ``D + c`` and verify ``S o (D + c) + r = op`` and
    ``op(exp(-c x)) = r exp(-c x)`` independently of the division itself."""
    s, r = right_divide_monic_linear(op, c)
    divisor = DiffOp(op.ring, [c, 1])
    rebuilt = op_mul(s, divisor) + DiffOp(op.ring, [r])
    trial.check(rebuilt == op, (op, f"c={c}"), op, rebuilt)
    w = ExpPoly.exp(Poly((0, -canon(c))))
    image = apply(op, w)
    trial.check(image == w * as_poly(r), (op, f"c={c}"), w * as_poly(r), image)
    if expect_zero is not None:
        trial.check((r == 0) == expect_zero, (op, f"c={c}"),
                    "remainder 0" if expect_zero else "nonzero remainder", r)
    return s, r


def _ring(rng):
    return POLYNOMIALS if rng.random() < 0.7 else CONSTANTS


def _op(rng, ring=None, **kw):
    ring = ring or _ring(rng)
    return gen.diffop(rng, ring, field="QI" if ring is CONSTANTS and rng.random() < 0.3 else "Q",
                      **kw)


@prop("PDO1.1", "reverse(reverse(L)) = L")
def involution(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        op = _op(rng)
        trial.check(op_reverse(op_reverse(op)) == op, op, op, op_reverse(op_reverse(op)))


@prop("PDO1.2", "cipher(reverse(L)) = cipher(L)")
def cipher_preserved(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        op = _op(rng)
        trial.check(op_cipher(op_reverse(op)) == op_cipher(op), op, op_cipher(op),
                    op_cipher(op_reverse(op)))


@prop("PDO1.3", "reverse(L + R) = reverse(L) + reverse(R) for equal ciphers")
def additivity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        ring = _ring(rng)
        n = rng.randint(0, 6)
        while True:
            a, b = _op(rng, ring, order=n), _op(rng, ring, order=n)
            s = a + b
            if s.order == n and s.coeffs[0] != 0:
                break
        lhs, rhs = op_reverse(a + b), op_reverse(a) + op_reverse(b)
        trial.check(lhs == rhs, (a, b), rhs, lhs)


@prop("PDO2", "even-cipher palindromic operators have right divisor D + 1, "
      "antipalindromic ones D - 1", cases=200)
def right_divisors(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        order = rng.choice([1, 3, 5])
        pal = gen.symmetric_diffop(rng, order, anti=False)
        trial.check(op_classify(pal) is PAL, pal, PAL.value, op_classify(pal).value)
        checked_division(trial, pal, 1, expect_zero=True)
        anti = gen.symmetric_diffop(rng, order, anti=True)
        trial.check(op_classify(anti) is ANTI, anti, ANTI.value, op_classify(anti).value)
        checked_division(trial, anti, -1, expect_zero=True)


def _closure(trial, rng, cases, anti: bool):
    want = ANTI if anti else PAL
    for _ in range(cases):
        trial.case()
        ring = _ring(rng)
        n = rng.randint(1, 6)
        while True:
            a = gen.symmetric_diffop(rng, n, anti, ring)
            b = gen.symmetric_diffop(rng, n, anti, ring)
            s = a + b
            if s.order == n:
                break
        trial.check(op_classify(s) is want, (a, b), want.value, op_classify(s).value)


@prop("PDO3.1", "palindromic + palindromic (same order) is palindromic")
def pal_add(trial, rng, cases):
    _closure(trial, rng, cases, anti=False)


@prop("PDO3.2", "antipalindromic + antipalindromic (same order) is antipalindromic")
def anti_add(trial, rng, cases):
    _closure(trial, rng, cases, anti=True)


@prop("PDO4.1", "reverse(L) <> reverse(R) = reverse(R <> L)")
def paste_mixed(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        ring = _ring(rng)
        a, b = _op(rng, ring, max_order=5), _op(rng, ring, max_order=5)
        lhs, rhs = op_paste(op_reverse(a), op_reverse(b)), op_reverse(op_paste(b, a))
        trial.check(lhs == rhs, (a, b), rhs, lhs)
        composed = op_mul(b, DiffOp.D(ring, op_cipher(a))) + a
        trial.check(op_paste(b, a) == composed, (b, a), composed, op_paste(b, a))


@prop("PDO4.2", "(L <> R) <> S = L <> (R <> S)")
def paste_assoc(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        ring = _ring(rng)
        a, b, c = (_op(rng, ring, max_order=4, unit_constant=False) for _ in range(3))
        lhs, rhs = op_paste(op_paste(a, b), c), op_paste(a, op_paste(b, c))
        trial.check(lhs == rhs, (a, b, c), rhs, lhs)


@prop("PDO5", "D + 1 is a right divisor of L <> reverse(L)")
def paste_divisor(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        op = _op(rng, POLYNOMIALS, max_order=4)
        m = op_paste(op, op_reverse(op))
        trial.check(op_classify(m) is PAL, op, PAL.value, op_classify(m).value)
        trial.check(op_cipher(m) % 2 == 0, op, "even cipher", op_cipher(m))
        checked_division(trial, m, 1, expect_zero=True)


@prop("DIV", "every right division by D + c satisfies S o (D + c) + r = L and "
      "L(exp(-cx)) = r exp(-cx)")
def division_soundness(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        op = _op(rng, order=rng.randint(1, 6), unit_constant=False)
        c = gen.scalar(rng, gen.pick_field(rng) if op.ring is CONSTANTS else "Q")
        checked_division(trial, op, c)


def _const_op(rng, **kw):
    return gen.diffop(rng, CONSTANTS, field=gen.pick_field(rng), **kw)


@prop("PDOC1.1", "over constants, reverse(L) = D^n L(1/D) through the characteristic polynomial")
def char_reverse(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        op = _const_op(rng, max_order=10)
        p = char_poly(op)
        trial.check(char_poly(op_reverse(op)) == reverse(p), op, reverse(p),
                    char_poly(op_reverse(op)))
        n = op.order
        t = gen.rational(rng, nonzero=True)
        want = canon(t ** n * p(1 / t))
        trial.check(char_poly(op_reverse(op))(t) == want, (op, t), want,
                    char_poly(op_reverse(op))(t))


@prop("PDOC1.3", "over constants, reversing a product of first-order factors swaps each factor")
def char_factored(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        f = gen.factored(rng, max_deg=6, field=gen.pick_field(rng))
        lhs = expand_op(reverse_factored(f))
        rhs = op_reverse(expand_op(f))
        trial.check(lhs == rhs, f.factors, rhs, lhs)


@prop("PDOC1.4", "over constants, reverse(L R) = reverse(L) reverse(R); the characteristic "
      "polynomial carries products, Pasting and classification")
def char_transfer(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        a, b = _const_op(rng, max_order=6), _const_op(rng, max_order=6)
        ab = op_mul(a, b)
        trial.check(op_reverse(ab) == op_mul(op_reverse(a), op_reverse(b)), (a, b),
                    op_mul(op_reverse(a), op_reverse(b)), op_reverse(ab))
        trial.check(ab == op_mul(b, a), (a, b), "commuting", op_mul(b, a))
        trial.check(char_poly(ab) == char_poly(a) * char_poly(b), (a, b),
                    char_poly(a) * char_poly(b), char_poly(ab))
        trial.check(char_poly(op_paste(a, b)) == paste(char_poly(a), char_poly(b)), (a, b),
                    paste(char_poly(a), char_poly(b)), char_poly(op_paste(a, b)))
        trial.check(op_classify(a) is classify(char_poly(a)), a,
                    classify(char_poly(a)).value, op_classify(a).value)


def _product_closure(trial, rng, cases, anti_a, anti_b, want):
    for _ in range(cases):
        trial.case()
        field = gen.pick_field(rng)
        a = gen.symmetric_diffop(rng, rng.randint(int(anti_a), 6), anti_a, CONSTANTS, field=field)
        b = gen.symmetric_diffop(rng, rng.randint(int(anti_b), 6), anti_b, CONSTANTS, field=field)
        ab = op_mul(a, b)
        trial.check(op_classify(ab) is want, (a, b), want.value, op_classify(ab).value)


@prop("PDOC1.6", "over constants, palindromic * palindromic is palindromic")
def pal_mul(trial, rng, cases):
    _product_closure(trial, rng, cases, False, False, PAL)


@prop("PDOC1.7", "over constants, antipalindromic * antipalindromic is palindromic")
def anti_mul(trial, rng, cases):
    _product_closure(trial, rng, cases, True, True, PAL)


@prop("PDOC1.8", "over constants, palindromic * antipalindromic is antipalindromic")
def mixed_mul(trial, rng, cases):
    _product_closure(trial, rng, cases, False, True, ANTI)


@prop("PDOC1.2R", "x^j exp(lam x) in ker L iff x^j exp(x/lam) in ker reverse(L)", cases=100)
def kernel_reciprocity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        f = gen.factored_with_multiplicity(rng)
        op = expand_op(f)
        rev = op_reverse(op)
        for lam, mult in kernel_exponents(f):
            for j in range(mult):
                got = apply(op, exp_witness(lam, j))
                trial.check(got.is_zero(), (op, f"x^{j} exp({lam} x)"), 0, got)
                got = apply(rev, exp_witness(1 / lam, j))
                trial.check(got.is_zero(), (rev, f"x^{j} exp({canon(1 / lam)} x)"), 0, got)
            got = apply(op, exp_witness(lam, mult))
            trial.check(not got.is_zero(), (op, f"x^{mult} exp({lam} x)"), "nonzero", got)


@prop("PDOC1.5R", "kernel exponents of (anti)palindromic constant operators pair as lam, 1/lam",
      cases=200)
def kernel_pairs(trial, rng, cases):
    for i in range(cases):
        trial.case()
        f = gen.factored_symmetric(rng, max_deg=10, anti=i % 2 == 1)
        op = expand_op(f)
        report = root_pairing(f)
        for lam, mu in report.pairs:
            trial.check(canon(lam * mu) == 1, op, "reciprocal exponents", (lam, mu))
            for e in (lam, mu):
                got = apply(op, exp_witness(e))
                trial.check(got.is_zero(), (op, f"exp({e} x)"), 0, got)


@prop("ERR-PDOC1-2", "the kernel of reverse(L) holds exp(x/lam), not exp(-lam x)",
      cases=50, mode="fixed", kind=ERRATUM)
def kernel_erratum(trial, rng, cases):
    def probe(f):
        op = expand_op(f)
        rev = op_reverse(op)
        found = []
        for lam, _ in kernel_exponents(f):
            printed = apply(rev, exp_witness(-lam))
            corrected = apply(rev, exp_witness(1 / lam))
            found.append((lam, printed.is_zero(), corrected.is_zero(), printed))
        return op, rev, found

    trial.case()
    op, rev, found = probe(FactoredLinear(1, ((1, 2),)))  # D - 2
    (lam, printed_ok, corrected_ok, printed), = found
    if not printed_ok:
        trial.discrepancy((op, f"lam={lam}"), f"{rev} applied to exp({-lam}x) = {printed}",
                          f"{rev} applied to exp({canon(1 / lam)}x) = 0")
    trial.check(not printed_ok and corrected_ok, op, "printed fails, corrected passes",
                (printed_ok, corrected_ok))
    failures = 0
    for _ in range(cases - 1):
        trial.case()
        f = gen.factored_with_multiplicity(rng, max_deg=4)
        op, rev, found = probe(f)
        reciprocals = {canon(1 / lam) for lam, _ in kernel_exponents(f)}
        for lam, printed_ok, corrected_ok, _ in found:
            trial.check(corrected_ok, (op, f"lam={lam}"), 0, "corrected form failed")
            # exp(-lam x) is only annihilated when -lam happens to be some 1/mu
            trial.check(printed_ok == (canon(-lam) in reciprocals), (op, f"lam={lam}"),
                        "printed holds iff -lam is a reciprocal exponent", printed_ok)
            failures += not printed_ok
    trial.note(f"printed form failed for {failures} random kernel exponents")


@prop("ERR-DEFDO3", "Pasting as L D^c(R) + L breaks reverse(L) <> reverse(R) = reverse(R <> L)",
      cases=1, mode="fixed", kind=ERRATUM)
def paste_erratum(trial, rng, cases):
    trial.case()
    a = DiffOp(POLYNOMIALS, [2, 1])  # D + 2
    b = DiffOp(POLYNOMIALS, [1, 2])  # 2D + 1
    printed_lhs = printed_op_paste(op_reverse(a), op_reverse(b))
    printed_rhs = op_reverse(printed_op_paste(b, a))
    ok_corrected = op_paste(op_reverse(a), op_reverse(b)) == op_reverse(op_paste(b, a))
    if printed_lhs != printed_rhs:
        trial.discrepancy((a, b), f"{printed_lhs} != {printed_rhs}",
                          f"{op_paste(op_reverse(a), op_reverse(b))} on both sides")
    trial.check(printed_lhs != printed_rhs and ok_corrected, (a, b),
                "printed fails, corrected passes", (printed_lhs, printed_rhs))


@prop("WEYL", "D x - x D = 1, and D a - a D = a' for polynomial a")
def weyl(trial, rng, cases):
    d = DiffOp.D(POLYNOMIALS)
    x = DiffOp(POLYNOMIALS, [Poly.x()])
    trial.case()
    comm = op_mul(d, x) - op_mul(x, d)
    trial.check(comm == DiffOp(POLYNOMIALS, [1]), "D x - x D", 1, comm)
    for _ in range(cases - 1):
        trial.case()
        a = gen.poly(rng, max_deg=6)
        op_a = DiffOp(POLYNOMIALS, [a])
        comm = op_mul(d, op_a) - op_mul(op_a, d)
        want = DiffOp(POLYNOMIALS, [a.derivative()])
        trial.check(comm == want, a, want, comm)


@prop("REMARK-KER", "exp(-x^2/2) is annihilated by D^2 + 1 - x^2", cases=1, mode="fixed")
def remark_kernel(trial, rng, cases):
    trial.case()
    op = DiffOp(POLYNOMIALS, [Poly((1, 0, -1)), 0, 1])
    w = ExpPoly.exp(Poly((0, 0, Fraction(-1, 2))))
    got = apply(op, w)
    trial.check(got.is_zero(), (op, w), 0, got)


@prop("ORD1", "for order-1 L, (log y)'(log u)' = 1 with y in ker L, u in ker reverse(L)",
      cases=100)
def log_derivatives(trial, rng, cases):
    for i in range(cases):
        trial.case()
        a0 = gen.ring_element(rng, POLYNOMIALS, nonzero=True)
        a1 = (Poly.constant(gen.rational(rng, True)) if i % 2 == 0
              else gen.ring_element(rng, POLYNOMIALS, nonzero=True))
        op = DiffOp(POLYNOMIALS, [a0, a1])
        u1, u2, product = log_derivative_product(op)
        trial.check(product == RationalFunc(1), op, 1, product)
        # y'/y = u1 solves a1 y' + a0 y = 0, and likewise for the reversed operator
        trial.check((RationalFunc(a1) * u1 + RationalFunc(a0)).is_zero(), op, 0,
                    RationalFunc(a1) * u1 + RationalFunc(a0))
        trial.check((RationalFunc(a0) * u2 + RationalFunc(a1)).is_zero(), op, 0,
                    RationalFunc(a0) * u2 + RationalFunc(a1))
        if a1.is_constant():
            y = ExpPoly.exp(u1.num.antiderivative() * (1 / u1.den[0]))
            got = apply(op, y)
            trial.check(got.is_zero(), (op, y), 0, got)
        if a0.is_constant():
            u = ExpPoly.exp(u2.num.antiderivative() * (1 / u2.den[0]))
            got = apply(op_reverse(op), u)
            trial.check(got.is_zero(), (op_reverse(op), u), 0, got)
