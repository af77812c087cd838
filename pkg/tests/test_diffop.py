from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pastrev.diffop import (CONSTANTS, POLYNOMIALS, DiffOp, ExpPoly, apply, char_poly,
                            exp_witness, expand_op, kernel_exponents, log_derivative_product,
                            op_add, op_cipher, op_classify, op_mul, op_paste, op_paste_fold,
                            op_reverse, printed_op_paste, right_divide_monic_linear)
from pastrev.errors import DomainError
from pastrev.grammar import parse_exppoly as E, parse_factored, parse_op as L, parse_ratfunc
from pastrev.poly import Poly, Symmetry

from conftest import nonzero_rationals, polys, rationals


def test_ring_selection():
    assert L("x*D^3 + 2*D^2 + 2*D + x").ring is POLYNOMIALS
    assert L("D^2 + 1 - x^2").ring is POLYNOMIALS
    assert L("2*D + 3").ring is CONSTANTS


def test_add_examples():
    assert op_add(L("D+1"), L("D-1")) == L("2*D")
    assert op_add(L("x*D^2+1"), L("D^2+x")) == L("(x+1)*D^2+(x+1)")
    op = L("x*D^2+3")
    assert op_add(op, -1 * op).is_zero()


def test_mul_examples():
    assert op_mul(L("D+0*x"), L("x")) == L("x*D+1")
    assert op_mul(L("D+x"), L("D+1+0*x")) == L("D^2+(1+x)*D+x")
    a, b = L("D-2"), L("D-3")
    assert op_mul(a, b) == op_mul(b, a) == L("D^2-5*D+6")


def test_weyl_commutator():
    d, x = DiffOp.D(POLYNOMIALS), DiffOp(POLYNOMIALS, [Poly.x()])
    assert op_mul(d, x) - op_mul(x, d) == DiffOp(POLYNOMIALS, [1])


def test_reverse_examples():
    assert op_reverse(L("2*D+3")) == L("3*D+2")
    assert op_reverse(L("D^2+1-x^2")) == L("(1-x^2)*D^2+1")
    op = L("x*D^3+2*D^2+2*D+x")
    assert op_reverse(op_reverse(op)) == op


def test_reverse_needs_nonzero_constant_coefficient():
    with pytest.raises(DomainError):
        op_reverse(L("D^2+D"))


def test_paste_examples():
    assert op_paste(L("D+2"), L("2*D+1")) == L("D^3+2*D^2+2*D+1")
    assert op_paste(L("1"), L("1")) == L("D+1")


def test_paste_associativity_example():
    a, b, c = L("D+0*x"), L("x"), L("1+0*x")
    both = op_paste(op_paste(a, b), c)
    assert both == op_paste(a, op_paste(b, c))
    # (D o D + x) o D + 1, expanded by hand
    assert both == L("D^3+x*D+1")
    assert op_paste_fold([a, b, c]) == both


def test_printed_tail_breaks_mixed_law():
    a, b = L("D+2"), L("3*D+1")
    assert op_paste(op_reverse(a), op_reverse(b)) == op_reverse(op_paste(b, a))
    assert printed_op_paste(op_reverse(a), op_reverse(b)) != op_reverse(printed_op_paste(b, a))


@pytest.mark.parametrize("text, want", [("D+1", Symmetry.PALINDROMIC),
                                        ("D-1", Symmetry.ANTIPALINDROMIC),
                                        ("x*D^3+2*D^2+2*D+x", Symmetry.PALINDROMIC),
                                        ("D+2", Symmetry.NEITHER)])
def test_classify(text, want):
    assert op_classify(L(text)) is want


def test_apply_examples():
    assert apply(L("D^2+1-x^2"), E("exp(-x^2/2)")).is_zero()
    assert apply(L("D+1"), E("exp(-x)")).is_zero()
    assert apply(L("D-2"), E("x*exp(2x)")) == E("exp(2x)")


def test_exppoly_canonical_forms():
    assert E("exp(x) + exp(x)") == E("2*exp(x)")
    assert E("exp(x)*exp(-x)") == E("1")
    assert (E("x*exp(x)") - E("x*exp(x)")).is_zero()
    assert E("exp(x^2)").derivative() == E("2x*exp(x^2)")


@pytest.mark.parametrize("text, c, quotient, rem", [
    ("D^2+(1+x)*D+x", 1, "D+x", 0),
    ("x*D^3+2*D^2+2*D+x", 1, "x*D^2+(2-x)*D+x", 0),
    ("D-1", 1, "1", -2),
])
def test_division_examples(text, c, quotient, rem):
    op = L(text)
    s, r = right_divide_monic_linear(op, c)
    assert s == L(quotient)
    assert r == rem
    w = E(f"exp({-c}x)")
    assert apply(op, w) == w * r


def test_division_needs_positive_order():
    with pytest.raises(DomainError):
        right_divide_monic_linear(L("3"), 1)


def test_char_poly_examples():
    assert char_poly(L("D^2-5*D+6")) == Poly((6, -5, 1))
    assert char_poly(op_reverse(L("2*D+3"))) == Poly((2, 3))
    assert char_poly(op_mul(L("D-2"), L("D-3"))) == Poly((-2, 1)) * Poly((-3, 1))
    with pytest.raises(DomainError):
        char_poly(L("x*D"))


def test_kernel_examples():
    f = parse_factored(["1:2"])
    assert kernel_exponents(f) == ((2, 1),)
    rev = op_reverse(expand_op(f))
    assert rev == L("-2*D+1")
    assert apply(rev, exp_witness(Fraction(1, 2))).is_zero()

    f = parse_factored(["1:-1", "1:-1"])
    assert kernel_exponents(f) == ((-1, 2),)
    assert apply(expand_op(f), exp_witness(-1, 1)).is_zero()

    op = L("D^2+5/2*D+1")
    f = parse_factored(["1:-2", "1:-1/2"])
    assert expand_op(f) == op
    assert kernel_exponents(f) == ((-2, 1), (Fraction(-1, 2), 1))


def test_kernel_reciprocity_uses_inverse_exponent():
    f = parse_factored(["1:3"])
    rev = op_reverse(expand_op(f))
    assert apply(rev, exp_witness(Fraction(1, 3))).is_zero()
    assert not apply(rev, exp_witness(-3)).is_zero()


@pytest.mark.parametrize("text, u1, u2", [
    ("x*D+(x^2+1)", "-(x^2+1)/x", "-x/(x^2+1)"),
    ("2*D+3", "-3/2", "-2/3"),
    ("D+1", "-1", "-1"),
])
def test_log_derivative_examples(text, u1, u2):
    a, b, prod = log_derivative_product(L(text))
    assert a == parse_ratfunc(u1) and b == parse_ratfunc(u2)
    assert prod == parse_ratfunc("1")


def test_log_derivative_needs_order_one():
    with pytest.raises(DomainError):
        log_derivative_product(L("D^2+1"))


def test_rings_do_not_mix():
    with pytest.raises(DomainError):
        op_add(L("D+1"), L("D+x"))


def test_cipher():
    assert op_cipher(L("x*D^3+1")) == 4
    assert L("x*D^3+1").order == 3


ops = st.lists(polys(max_size=3), min_size=1, max_size=4).map(
    lambda cs: DiffOp(POLYNOMIALS, cs)).filter(lambda op: not op.is_zero())


@given(ops, ops, ops)
def test_composition_is_associative_and_distributive(a, b, c):
    assert op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c))
    assert op_mul(a, b + c) == op_mul(a, b) + op_mul(a, c)


@given(ops, ops, st.lists(rationals, min_size=1, max_size=3), rationals)
def test_composition_agrees_with_application(a, b, q, s):
    f = ExpPoly.exp(Poly((0, s)), Poly(q))
    assert apply(op_mul(a, b), f) == apply(a, apply(b, f))


@given(ops, rationals)
def test_division_identity(op, c):
    if op.order < 1:
        return
    s, r = right_divide_monic_linear(op, c)
    assert op_mul(s, DiffOp(POLYNOMIALS, [c, 1])) + DiffOp(POLYNOMIALS, [r]) == op


@given(st.lists(st.tuples(nonzero_rationals, nonzero_rationals), min_size=1, max_size=5))
def test_every_kernel_exponent_annihilates(pairs):
    f = parse_factored([f"{b}:{a}" for b, a in pairs])
    op = expand_op(f)
    rev = op_reverse(op)
    for lam, mult in kernel_exponents(f):
        for j in range(mult):
            assert apply(op, exp_witness(lam, j)).is_zero()
        assert apply(rev, exp_witness(1 / lam)).is_zero()
