"""Digit Reversing/Pasting over base-B numerals and the two identity tables."""
from __future__ import annotations

from itertools import product

from ..natnum import (Numeral, check_eleven, cipher_nat, game_nines, game_repunits,
                      is_palindrome, paste_nat, reverse_nat)
from . import generators as gen
from .harness import prop

# Rows as printed, "x" standing for the multiplication sign.
PRINTED_NINES = (
    "9x9+7=88", "98x9+6=888", "987x9+5=8888", "9876x9+4=88888", "98765x9+3=888888",
    "987654x9+2=8888888", "9876543x9+1=88888888", "98765432x9+0=888888888",
    "987654321x9-1=8888888888",
)
PRINTED_REPUNITS = (
    "1x1=1", "11x11=121", "111x111=12321", "1111x1111=1234321", "11111x11111=123454321",
    "111111x111111=12345654321", "1111111x1111111=1234567654321",
    "11111111x11111111=123456787654321", "111111111x111111111=12345678987654321",
)


def compact(row_text: str) -> str:
    return row_text.replace(" ", "")


@prop("N1", "reverse(reverse(n)) = n when the last digit is nonzero")
def involution(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        n = gen.numeral(rng, base=gen.base(rng), trailing_nonzero=True)
        trial.check(reverse_nat(reverse_nat(n)) == n, n, n, reverse_nat(reverse_nat(n)))


@prop("N2", "reverse(n) <> reverse(m) = reverse(m <> n) when last digits are nonzero")
def mixed_paste(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        b = gen.base(rng)
        n = gen.numeral(rng, 15, b, trailing_nonzero=True)
        m = gen.numeral(rng, 15, b, trailing_nonzero=True)
        lhs, rhs = paste_nat(reverse_nat(n), reverse_nat(m)), reverse_nat(paste_nat(m, n))
        trial.check(lhs == rhs, (n, m), rhs, lhs)
        want = b ** cipher_nat(n) * m.value + n.value
        trial.check(paste_nat(m, n).value == want, (m, n), want, paste_nat(m, n).value)


@prop("N3", "(m <> n) <> p = m <> (n <> p) for a nonzero middle operand")
def associativity(trial, rng, cases):
    for _ in range(cases):
        trial.case()
        b = gen.base(rng)
        m, p = gen.numeral(rng, 12, b), gen.numeral(rng, 12, b)
        n = gen.numeral(rng, 12, b)
        if n.value == 0:
            n = Numeral((rng.randrange(1, b),), b)
        lhs, rhs = paste_nat(paste_nat(m, n), p), paste_nat(m, paste_nat(n, p))
        trial.check(lhs == rhs, (m, n, p), rhs, lhs)
    # 0 <> p = p drops the zero digit, so a zero middle operand breaks the law
    one, zero = Numeral.from_int(1), Numeral.from_int(0)
    left = paste_nat(paste_nat(one, zero), one)
    right = paste_nat(one, paste_nat(zero, one))
    if left != right:
        trial.note(f"zero middle operand: (1 <> 0) <> 1 = {left} but 1 <> (0 <> 1) = {right}")


def _even_palindromes(cipher: int, base: int = 10):
    for head in product(range(base), repeat=cipher // 2):
        if head[0]:
            yield Numeral(head + head[::-1], base)


@prop("N4", "every even-cipher palindrome is divisible by base + 1", cases=0, mode="exhaustive")
def even_palindromes(trial, rng, cases):
    for cipher in (2, 4, 6):
        for n in _even_palindromes(cipher):
            trial.case()
            trial.check(is_palindrome(n) and cipher_nat(n) == cipher, n, "palindrome", n)
            trial.check(check_eleven(n), n, "divisible by 11", n.value % 11)


@prop("N5", "n <> reverse(n) is divisible by base + 1", cases=99999, mode="exhaustive")
def paste_reverse(trial, rng, cases):
    boundary = []
    for v in range(1, cases + 1):
        n = Numeral.from_int(v)
        m = paste_nat(n, reverse_nat(n))
        if v % 10 == 0:
            if not check_eleven(m):
                boundary.append(v)
            continue
        trial.case()
        trial.check(check_eleven(m), n, "divisible by 11", m.value % 11)
    if boundary:
        trial.note(f"trailing-zero inputs outside the hypothesis: {len(boundary)} of "
                   f"{cases // 10} are not divisible, first {boundary[0]} -> "
                   f"{paste_nat(Numeral.from_int(boundary[0]), reverse_nat(Numeral.from_int(boundary[0])))}")


@prop("NG1", "the 9s table reproduces the printed rows", cases=1, mode="fixed")
def nines_table(trial, rng, cases):
    rows = game_nines(10)
    for row, printed in zip(rows, PRINTED_NINES):
        trial.case()
        trial.check(compact(row.text()) == printed and row.equal, row.n, printed, row.text())
    trial.case()
    trial.check(rows[9].equal and rows[9].text() == "9876543210 x 9 - 2 = 88888888888",
                9, "9876543210 x 9 - 2 = 88888888888", rows[9].text())


@prop("NG2", "the repunit table reproduces the printed rows", cases=1, mode="fixed")
def repunit_table(trial, rng, cases):
    for row, printed in zip(game_repunits(9), PRINTED_REPUNITS):
        trial.case()
        trial.check(compact(row.text()) == printed and row.equal, row.n, printed, row.text())
