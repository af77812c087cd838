from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from pastrev.cheb import (ChebExpansion, cheb_T, cheb_to_palindromic, palindromic_to_cheb,
                          printed_expansion)
from pastrev.errors import DomainError
from pastrev.grammar import parse_poly
from pastrev.poly import Poly

from conftest import nonzero_rationals, rationals

w_sym, z_sym = sympy.symbols("w z")


def Z(text):
    return parse_poly(text, var="z")


def _sympy_coeffs(expr, var):
    return [Fraction(str(c)) for c in reversed(sympy.Poly(expr, var).all_coeffs())]


@pytest.mark.parametrize("n", range(0, 33))
def test_T_matches_sympy(n):
    assert cheb_T(n) == Poly(_sympy_coeffs(sympy.chebyshevt(n, w_sym), w_sym))


def test_T_small_cases():
    assert cheb_T(0) == Poly((1,))
    assert cheb_T(1) == Poly((0, 1))
    assert cheb_T(2) == Poly((-1, 0, 2))
    with pytest.raises(DomainError):
        cheb_T(-1)


@pytest.mark.parametrize("n", [0, 1, 2, 5, 11])
def test_T_defining_identity_symbolically(n):
    lhs = sympy.chebyshevt(n, (z_sym + 1 / z_sym) / 2)
    rhs = (z_sym ** n + z_sym ** -n) / 2
    assert sympy.simplify(lhs - rhs) == 0


def test_reduction_examples():
    assert palindromic_to_cheb(Z("z^2+3z+1")).coeffs == (Fraction(3, 2), 1)
    assert palindromic_to_cheb(Z("z^2+2z+1")).coeffs == (1, 1)
    assert palindromic_to_cheb(Z("2z^4+3z^3+7z^2+3z+2")).coeffs == (Fraction(7, 2), 3, 2)


def test_reduction_example_at_two():
    # P(2) / (2*2) = 11/4 and w = 5/4
    c = palindromic_to_cheb(Z("z^2+3z+1"))
    assert c.evaluate(Fraction(5, 4)) == Fraction(11, 4)


def test_unhalved_middle_coefficient_disagrees():
    c = printed_expansion(Z("z^2+3z+1"))
    assert c.evaluate(Fraction(5, 4)) == Fraction(17, 4)


def test_reconstruction_examples():
    assert cheb_to_palindromic(ChebExpansion((1, 1))) == Z("z^2+2z+1")
    assert cheb_to_palindromic(ChebExpansion((Fraction(1, 2),))) == Poly((1,))


@pytest.mark.parametrize("text", ["z^3+z^2+z+1", "z^2+2z+3", "z+1"])
def test_reduction_domain(text):
    with pytest.raises(DomainError):
        palindromic_to_cheb(Z(text))


def test_reconstruction_needs_nonzero_top():
    with pytest.raises(DomainError):
        cheb_to_palindromic(ChebExpansion((1, 0)))


half = st.lists(rationals, min_size=0, max_size=8)


def _palindromic(head, mid):
    return Poly(list(head) + [mid] + list(reversed(head)))


@given(half.filter(lambda h: not h or h[0] != 0), nonzero_rationals, nonzero_rationals)
def test_reduction_identity_against_sympy(head, mid, z):
    p = _palindromic(head, mid)
    n = p.degree // 2
    c = palindromic_to_cheb(p)
    expr = sum(sympy.Rational(str(ck)) * sympy.chebyshevt(k, (z_sym + 1 / z_sym) / 2)
               for k, ck in enumerate(c.coeffs))
    want = p(z) / (2 * z ** n)
    assert Fraction(str(expr.subs(z_sym, sympy.Rational(str(z))))) == want
    assert cheb_to_palindromic(c) == p
