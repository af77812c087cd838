"""Base-B numerals: digit Reversing and Pasting, palindromes, and the two
recreational identity tables (the 9s table and the repunit squares)."""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, ParseError

DIGIT_SYMBOLS = string.digits + string.ascii_lowercase


@dataclass(frozen=True)
class Numeral:
    """Digits most-significant first; ``(0,)`` is the only numeral with a leading 0."""

    digits: tuple[int, ...]
    base: int = 10
    value: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be at least 2, got {self.base}")
        digits = tuple(self.digits)
        if not digits:
            raise DomainError("a numeral needs at least one digit")
        if any(not 0 <= d < self.base for d in digits):
            raise DomainError(f"digit out of range for base {self.base}")
        i = 0
        while i < len(digits) - 1 and digits[i] == 0:
            i += 1
        digits = digits[i:]
        object.__setattr__(self, "digits", digits)
        value = 0
        for d in digits:
            value = value * self.base + d
        object.__setattr__(self, "value", value)

    @classmethod
    def from_int(cls, value: int, base: int = 10) -> Numeral:
        if value < 0:
            raise DomainError("numerals are nonnegative")
        if base < 2:
            raise DomainError(f"base must be at least 2, got {base}")
        digits = []
        while True:
            value, d = divmod(value, base)
            digits.append(d)
            if not value:
                break
        return cls(tuple(reversed(digits)), base)

    @classmethod
    def parse(cls, text: str, base: int = 10) -> Numeral:
        text = text.strip()
        if not text:
            raise ParseError("empty numeral", 0)
        digits = []
        for pos, ch in enumerate(text.lower()):
            d = DIGIT_SYMBOLS.find(ch)
            if d < 0 or d >= base:
                raise ParseError(f"invalid digit {ch!r} for base {base}",
                                 len(text[:pos].encode()))
            digits.append(d)
        return cls(tuple(digits), base)

    def __int__(self):
        return self.value

    def __str__(self):
        return "".join(DIGIT_SYMBOLS[d] for d in self.digits)


def _coerce(n, base: int = 10) -> Numeral:
    return n if isinstance(n, Numeral) else Numeral.from_int(n, base)


def cipher_nat(n: Numeral) -> int:
    return len(n.digits)


def reverse_nat(n: Numeral) -> Numeral:
    return Numeral(tuple(reversed(n.digits)), n.base)


def paste_nat(n: Numeral, m: Numeral) -> Numeral:
    if n.base != m.base:
        raise DomainError(f"cannot paste base {n.base} with base {m.base}")
    if n.digits == (0,):
        return m
    return Numeral(n.digits + m.digits, n.base)


def paste_fold_nat(xs: Sequence[Numeral | int], base: int = 10) -> Numeral:
    if not xs:
        raise DomainError("cannot paste an empty sequence")
    acc = _coerce(xs[0], base)
    for x in xs[1:]:
        acc = paste_nat(acc, _coerce(x, base))
    return acc


def is_palindrome(n: Numeral) -> bool:
    return n.digits == n.digits[::-1]


def check_eleven(n: Numeral) -> bool:
    """Divisibility by ``base + 1`` (11 in base ten)."""
    return n.value % (n.base + 1) == 0


@dataclass(frozen=True)
class GameRow:
    n: int
    lhs: str
    lhs_value: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs_value == self.rhs

    def text(self) -> str:
        return f"{self.lhs} = {self.rhs}"

    def as_dict(self) -> dict:
        return {"n": self.n, "lhs": self.lhs, "lhs_value": str(self.lhs_value),
                "rhs": str(self.rhs), "equal": self.equal}


def game_nines(rows: int) -> list[GameRow]:
    """``(9 <> 8 <> ... <> (9-n)) * 9 + (7-n)`` against ``n+2`` pasted eights."""
    if not 1 <= rows <= 10:
        raise DomainError("the nines table has between 1 and 10 rows")
    out = []
    for n in range(rows):
        a = paste_fold_nat([9 - k for k in range(n + 1)])
        addend = 9 - (n + 2)
        sign = "+" if addend >= 0 else "-"
        rhs = paste_fold_nat([8] * (n + 2))
        out.append(GameRow(n, f"{a} x 9 {sign} {abs(addend)}",
                           a.value * 9 + addend, rhs.value))
    return out


def game_repunits(rows: int) -> list[GameRow]:
    """Repunit squares against ``(1<>2<>...<>(n+1)) <> reverse(1<>...<>n)``."""
    if not 1 <= rows <= 9:
        raise DomainError("the repunit table has between 1 and 9 rows")
    out = []
    for n in range(rows):
        r = paste_fold_nat([1] * (n + 1))
        if n == 0:
            rhs = Numeral.from_int(1)
        else:
            up = paste_fold_nat([k + 1 for k in range(n + 1)])
            down = reverse_nat(paste_fold_nat([k + 1 for k in range(n)]))
            rhs = paste_nat(up, down)
        out.append(GameRow(n, f"{r} x {r}", r.value * r.value, rhs.value))
    return out
