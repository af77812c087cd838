"""Chebyshev identities and the palindromic half-degree reduction."""
from __future__ import annotations

from fractions import Fraction

from ..cheb import cheb_T, cheb_to_palindromic, palindromic_to_cheb, printed_expansion
from ..grammar import format_poly
from ..poly import Poly
from . import generators as gen
from .harness import ERRATUM, prop


def _w(z):
    return (z + 1 / z) / 2


@prop("CH.L1", "T_n((z + 1/z)/2) = (z^n + z^-n)/2", cases=33, mode="exhaustive")
def lemma_identity(trial, rng, cases):
    for n in range(cases):
        trial.case()
        t = cheb_T(n)
        for _ in range(10):
            z = gen.rational(rng, nonzero=True)
            want = (z ** n + z ** -n) / 2
            trial.check(t(_w(z)) == want, (f"n={n}", z), want, t(_w(z)))


def _z(p: Poly) -> str:
    return format_poly(p, "z")


def _random_palindromic(rng):
    n = rng.randint(0, 16)
    return gen.symmetric_poly(rng, 2 * n)


@prop("CH.SOKO", "P(z) / (2 z^n) = c_0 + sum c_k T_k((z + 1/z)/2) for palindromic P of "
      "degree 2n", cases=100)
def reduction(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = _random_palindromic(rng)
        c = palindromic_to_cheb(p)
        for _ in range(5):
            z = gen.rational(rng, nonzero=True)
            lhs = p(z) / (2 * z ** c.n)
            trial.check(lhs == c.evaluate(_w(z)), (_z(p), z), lhs, c.evaluate(_w(z)))


@prop("CH.RT", "Chebyshev expansion and palindromic reconstruction are inverse", cases=100)
def round_trip(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        p = _random_palindromic(rng)
        back = cheb_to_palindromic(palindromic_to_cheb(p))
        trial.check(back == p, _z(p), _z(p), _z(back))


@prop("ERR-SOKOEQ", "the reduction with the unhalved middle coefficient on T_0 fails the "
      "evaluation identity", cases=20, mode="fixed", kind=ERRATUM)
def sokoeq_erratum(trial, rng, cases):
    trial.case()
    p = Poly((1, 3, 1))  # z^2 + 3z + 1
    z = Fraction(2)
    lhs = p(z) / (2 * z)
    printed = printed_expansion(p).evaluate(_w(z))
    corrected = palindromic_to_cheb(p).evaluate(_w(z))
    if printed != lhs:
        trial.discrepancy((_z(p), z), f"{printed} != {lhs}", f"{corrected} == {lhs}")
    trial.check(printed != lhs and corrected == lhs, (_z(p), z), "printed fails, corrected passes",
                (printed, corrected, lhs))
    reproduced = 0
    for _ in range(cases - 1):
        trial.case()
        q = _random_palindromic(rng)
        z = gen.rational(rng, nonzero=True)
        lhs = q(z) / (2 * z ** (q.degree // 2))
        ok_printed = printed_expansion(q).evaluate(_w(z)) == lhs
        ok_corrected = palindromic_to_cheb(q).evaluate(_w(z)) == lhs
        trial.check(ok_corrected, (_z(q), z), lhs, palindromic_to_cheb(q).evaluate(_w(z)))
        # the two differ by half the middle coefficient
        trial.check(ok_printed == (q[q.degree // 2] == 0), (_z(q), z), "printed fails iff a_n != 0",
                    ok_printed)
        reproduced += not ok_printed
    trial.note(f"printed form failed on {reproduced} of {cases - 1} random palindromic inputs")
