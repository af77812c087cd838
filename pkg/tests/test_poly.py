from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pastrev.errors import DomainError
from pastrev.exactfield import I, conj
from pastrev.grammar import parse_factored, parse_poly as P
from pastrev.poly import (FactoredLinear, Poly, Symmetry, cipher, classify, divides_at, expand,
                          paste, paste_fold, poly_arith, raw_coefficient_flip, reciprocal_conj,
                          reverse, reverse_factored, root_pairing)

from conftest import gaussians, nonzero_rationals, polys, rationals


@pytest.mark.parametrize("text, n", [("3x^2+2x+1", 3), ("7", 1), ("x^5+1", 6)])
def test_cipher(text, n):
    assert cipher(P(text)) == n


def test_cipher_of_zero_is_domain_error():
    with pytest.raises(DomainError):
        cipher(Poly())


def test_reverse_examples():
    assert reverse(P("3x^2+2x+1")) == P("x^2+2x+3")
    assert reverse(P("2x+3")) == P("3x+2")
    # x * P(1/x) computed by hand
    t = Fraction(5)
    assert reverse(P("2x+3"))(t) == t * P("2x+3")(1 / t)
    p = P("5x^3-x^2+4x+7")
    assert reverse(reverse(p)) == p


def test_reverse_rejects_zero_constant_term():
    with pytest.raises(DomainError):
        reverse(P("x^2+x"))


@pytest.mark.parametrize("text, want", [("x^2+x", "x+1"), ("3x^2+2x+1", "x^2+2x+3"),
                                        ("x^3", "1")])
def test_raw_flip(text, want):
    assert raw_coefficient_flip(P(text)) == P(want)


def test_paste_examples():
    assert paste(P("x+2"), P("2x+1")) == P("x^3+2x^2+2x+1")
    # x^2 (x+2) + (2x+1), expanded independently
    assert paste(P("x+2"), P("2x+1")) == P("x^2") * P("x+2") + P("2x+1")
    assert paste(P("1"), P("1")) == P("x+1")


def test_paste_associativity_example():
    p, q, r = P("x+1"), P("2"), P("3x")
    both = paste(paste(p, q), r)
    assert both == paste(p, paste(q, r))
    # x^3 (x^2 + x... ) by hand: ((x+1) x + 2) x^2 + 3x
    assert both == P("x^4+x^3+2x^2+3x")


def test_paste_fold_examples():
    assert paste_fold([P("1")] * 3) == P("x^2+x+1")
    assert paste_fold([P("x"), P("1")]) == P("x^2+1")
    with pytest.raises(DomainError):
        paste_fold([])


@given(st.lists(polys(max_size=4), min_size=1, max_size=5))
def test_fold_left_equals_fold_right(ps):
    left = ps[0]
    for p in ps[1:]:
        left = paste(left, p)
    assert paste_fold(ps) == left


@pytest.mark.parametrize("text, want", [
    ("x+1", Symmetry.PALINDROMIC), ("x-1", Symmetry.ANTIPALINDROMIC),
    ("2x^2-5x+2", Symmetry.PALINDROMIC), ("x^2+2x+3", Symmetry.NEITHER),
    ("x^3-x^2+x-1", Symmetry.ANTIPALINDROMIC),
])
def test_classify(text, want):
    assert classify(P(text)) is want


def test_expand_examples():
    assert expand(FactoredLinear(1, ((1, 2), (2, 1)))) == P("2x^2-5x+2")
    assert expand(FactoredLinear(1, ())) == P("1")
    assert expand(FactoredLinear(-3, ((1, 0),))) == P("-3x")


def test_reverse_factored_examples():
    f = FactoredLinear(1, ((1, 2), (2, 1)))
    g = reverse_factored(f)
    assert g.factors == ((2, 1), (1, 2)) and g.unit == 1
    assert expand(g) == P("2x^2-5x+2")

    g = reverse_factored(FactoredLinear(1, ((1, -1),)))
    assert g.factors == ((-1, 1),) and g.unit == -1
    assert expand(g) == P("x+1") == reverse(P("x+1"))

    g = reverse_factored(FactoredLinear(1, ((2, 3),)))
    # x (2/x - 3) = 2 - 3x
    assert expand(g) == P("-3x+2") == reverse(P("2x-3"))


def test_reverse_factored_rejects_root_at_zero():
    with pytest.raises(DomainError):
        reverse_factored(FactoredLinear(1, ((1, 0),)))


def test_root_pairing_examples():
    r = root_pairing(parse_factored(["1:2", "2:1"]))
    assert r.symmetry is Symmetry.PALINDROMIC
    assert {frozenset(p) for p in r.pairs} == {frozenset({2, Fraction(1, 2)})}
    assert r.unpaired == ()
    assert root_pairing(parse_factored(["1:-1"])).unpaired == (-1,)
    assert root_pairing(parse_factored(["1:1"])).unpaired == (1,)


def test_root_pairing_odd_cipher_antipalindromic():
    # x^2 - 1 has roots +1 and -1, neither reciprocal to the other
    r = root_pairing(parse_factored(["1:1", "1:-1"]))
    assert r.symmetry is Symmetry.ANTIPALINDROMIC
    assert r.pairs == () and set(r.unpaired) == {1, -1}


def test_root_pairing_requires_symmetry():
    with pytest.raises(DomainError):
        root_pairing(parse_factored(["1:2", "1:3"]))


@pytest.mark.parametrize("text, c, want", [("x^3+2x^2+2x+1", -1, True), ("x+1", 1, False),
                                           ("x^2-1", 1, True)])
def test_divides_at(text, c, want):
    assert divides_at(P(text), c) is want


def test_reciprocal_conj_examples():
    assert reciprocal_conj(P("(1+i)x+2")) == P("2x+(1-i)")
    assert reciprocal_conj(P("3x^2+2x+1")) == P("x^2+2x+3")
    p = P("(2+i)x+5")
    assert reciprocal_conj(reciprocal_conj(p)) == p


def test_poly_arith_examples():
    assert poly_arith(P("x+1"), P("x-1"), "mul") == P("x^2-1")
    assert poly_arith(P("x+1"), P("x-1"), "add") == P("2x")
    assert poly_arith(P("2x^2-5x+2"), P("x+1"), "mul") == P("2x^3-3x^2-3x+2")
    assert poly_arith(P("x"), P("x"), "sub").is_zero()


@given(polys(unit_constant=True), st.lists(nonzero_rationals, min_size=1, max_size=4))
def test_reverse_is_inversion(p, points):
    n = cipher(p) - 1
    for t in points:
        assert reverse(p)(t) == t ** n * p(1 / t)


@given(polys(unit_constant=True), polys(unit_constant=True))
def test_reverse_multiplicative_and_mixed_paste(p, q):
    assert reverse(p * q) == reverse(p) * reverse(q)
    assert paste(reverse(p), reverse(q)) == reverse(paste(q, p))


@given(polys(unit_constant=True))
def test_paste_with_reverse_is_palindromic_and_vanishes_at_minus_one(p):
    m = paste(p, reverse(p))
    assert classify(m) is Symmetry.PALINDROMIC
    assert m(-1) == 0


@given(polys(gaussians, unit_constant=True))
def test_reciprocal_is_conjugated_reverse(p):
    assert reciprocal_conj(p) == reverse(p.map_coeffs(conj))


@given(polys(), polys())
def test_divmod_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_gaussian_coefficients_evaluate():
    p = P("x^2+1")
    assert p(I) == 0
