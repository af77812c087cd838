"""Parsers and canonical renderers for the text forms of polynomials,
scalars, rational functions, exp-polynomials and differential operators.

All parsers share one recursive-descent evaluator over this grammar::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/' | <juxtaposition>) factor)*
    factor  := ('+' | '-') factor | primary ('^' INT)?
    primary := INT | LETTER | 'exp' '(' expr ')' | '(' expr ')'

Juxtaposition ("2x", "1/2 x", "(2+i)x") is a product, except that the
operator letter ``D`` must be joined by an explicit ``*``.  Division is
only allowed by constants (or by anything, for rational functions).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .diffop import CONSTANTS, POLYNOMIALS, DiffOp, ExpPoly, as_poly
from .errors import DomainError, ParseError
from .exactfield import I, canon, format_scalar, is_gaussian
from .poly import FactoredLinear, Poly
from .ratfunc import RationalFunc

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<func>exp)(?=\s*\()|(?P<id>[A-Za-z])"
                    r"|(?P<op>\*\*|[-+*/^()−]))")


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte(text, pos))
        kind = m.lastgroup
        val = m.group(kind)
        start = m.start(kind)
        if val == "−":
            val = "-"
        elif val == "**":
            val = "^"
        toks.append(_Tok(kind, val, start))
        pos = m.end()
    toks.append(_Tok("end", "", n))
    return toks


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


@dataclass
class _Language:
    lift: Callable                  # scalar -> value
    letters: dict                   # letter -> value
    constant_of: Callable           # value -> scalar or None
    divide: Callable | None = None  # (value, value) -> value, general division
    functions: dict | None = None
    explicit: frozenset = frozenset()


class _Parser:
    def __init__(self, text: str, lang: _Language):
        self.text = text
        self.lang = lang
        self.toks = _tokenize(text)
        self.i = 0
        self.seen: set[str] = set()

    def error(self, msg: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(msg, _byte(self.text, tok.pos))

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind not in ("op",):
            raise self.error(f"expected {text!r}")
        return self.take()

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_primary(self, tok: _Tok) -> bool:
        return tok.kind in ("id", "func") or (tok.kind == "op" and tok.text == "(")

    def term(self):
        value, last = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                rhs, last = self.factor()
                value = value * rhs
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                rhs_tok = self.peek()
                rhs, last = self.factor()
                value = self._divide(value, rhs, rhs_tok)
            elif self._starts_primary(tok):
                if last in self.lang.explicit or tok.text in self.lang.explicit:
                    raise self.error(f"'{tok.text}' must be joined with an explicit '*'", tok)
                rhs, last = self.factor()
                value = value * rhs
            else:
                return value

    def _divide(self, a, b, tok: _Tok):
        if self.lang.divide is not None:
            try:
                return self.lang.divide(a, b)
            except DomainError as exc:
                raise self.error(str(exc), tok) from None
        c = self.lang.constant_of(b)
        if c is None:
            raise self.error("division is only allowed by a constant", tok)
        if c == 0:
            raise self.error("division by zero", tok)
        return a * self.lang.lift(1 / c)

    def factor(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            value, last = self.factor()
            return (-value if tok.text == "-" else value), last
        value, last = self.primary()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            etok = self.peek()
            if etok.kind != "num":
                raise self.error("exponent must be a nonnegative integer", etok)
            self.take()
            value = value ** int(etok.text)
        return value, last

    def primary(self):
        tok = self.take()
        if tok.kind == "num":
            return self.lang.lift(Fraction(int(tok.text))), tok.text
        if tok.kind == "id":
            if tok.text not in self.lang.letters:
                raise self.error(f"unknown variable {tok.text!r}", tok)
            self.seen.add(tok.text)
            return self.lang.letters[tok.text](), tok.text
        if tok.kind == "func":
            funcs = self.lang.functions or {}
            if tok.text not in funcs:
                raise self.error(f"unknown function {tok.text!r}", tok)
            self.expect("(")
            arg_tok = self.peek()
            arg = self.expr()
            self.expect(")")
            try:
                return funcs[tok.text](arg), ")"
            except DomainError as exc:
                raise self.error(str(exc), arg_tok) from None
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect(")")
            return value, ")"
        self.i -= 1
        raise self.error("expected a number, variable or '('" if tok.kind != "end"
                         else "unexpected end of input", tok)


def _poly_language(var: str | None) -> _Language:
    letters = {"i": lambda: Poly.constant(I)}
    if var is not None:
        letters[var] = Poly.x
    return _Language(
        lift=Poly.constant,
        letters=letters,
        constant_of=lambda p: p[0] if p.is_constant() else None,
    )


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse a polynomial in ``var`` with rational or Gaussian coefficients."""
    return _Parser(text, _poly_language(var)).parse()


def parse_scalar(text: str):
    """Parse ``p``, ``p/q``, ``a+bi``, ``bi`` and similar constant forms."""
    return _Parser(text, _poly_language(None)).parse()[0]


def _ratfunc_divide(a: RationalFunc, b: RationalFunc) -> RationalFunc:
    if b.is_zero():
        raise DomainError("division by zero")
    return a / b


def parse_ratfunc(text: str, var: str = "x") -> RationalFunc:
    lang = _Language(
        lift=RationalFunc,
        letters={var: lambda: RationalFunc(Poly.x()), "i": lambda: RationalFunc(I)},
        constant_of=lambda r: None,
        divide=_ratfunc_divide,
    )
    return _Parser(text, lang).parse()


def _exp_of(arg: ExpPoly) -> ExpPoly:
    if arg.is_zero():
        return ExpPoly.poly(1)
    if len(arg.terms) != 1 or not arg.terms[0][1].is_zero():
        raise DomainError("exp() takes a polynomial argument")
    return ExpPoly.exp(arg.terms[0][0])


def _exp_constant(f: ExpPoly):
    if f.is_zero():
        return Fraction(0)
    if len(f.terms) == 1:
        q, s = f.terms[0]
        if s.is_zero() and q.is_constant():
            return q[0]
    return None


def parse_exppoly(text: str, var: str = "x") -> ExpPoly:
    """Parse sums of ``q(x)*exp(s(x))`` terms, e.g. ``x*exp(2x) - exp(-x^2/2)``."""
    lang = _Language(
        lift=ExpPoly.poly,
        letters={var: lambda: ExpPoly.poly(Poly.x()), "i": lambda: ExpPoly.poly(I)},
        constant_of=_exp_constant,
        functions={"exp": _exp_of},
    )
    return _Parser(text, lang).parse()


def _op_constant(op: DiffOp):
    if op.is_zero():
        return Fraction(0)
    if op.order == 0 and op.coeffs[0].is_constant():
        return op.coeffs[0][0]
    return None


def parse_op(text: str) -> DiffOp:
    """Parse an operator in ``D``; the constants ring is chosen when ``x`` is absent."""
    lang = _Language(
        lift=lambda c: DiffOp(POLYNOMIALS, [c]),
        letters={
            "x": lambda: DiffOp(POLYNOMIALS, [Poly.x()]),
            "D": lambda: DiffOp.D(POLYNOMIALS),
            "i": lambda: DiffOp(POLYNOMIALS, [I]),
        },
        constant_of=_op_constant,
        explicit=frozenset("D"),
    )
    parser = _Parser(text, lang)
    op = parser.parse()
    if "x" in parser.seen:
        if "i" in parser.seen:
            raise ParseError("Gaussian coefficients cannot be mixed with x", 0)
        return op
    return DiffOp(CONSTANTS, [p[0] for p in op.coeffs])


def parse_factored(pairs: list[str], unit: str = "1") -> FactoredLinear:
    """``["beta:alpha", ...]`` -> ``unit * prod(beta*x - alpha)``."""
    factors = []
    for item in pairs:
        if item.count(":") != 1:
            raise ParseError(f"factor {item!r} must look like beta:alpha", 0)
        b, a = item.split(":")
        factors.append((parse_scalar(b), parse_scalar(a)))
    return FactoredLinear(parse_scalar(unit), tuple(factors))


# -- rendering ---------------------------------------------------------------

def _fmt_rational(q: Fraction) -> str:
    return format_scalar(q)


def _var_part(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def _signed_terms(p: Poly, var: str) -> list[tuple[str, str]]:
    """(sign, body) pairs, highest power first."""
    out = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        if is_gaussian(c):
            body = f"({format_scalar(c)})"
            out.append(("+", body if k == 0 else body + _var_part(var, k)))
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = _var_part(var, k)
        elif mag.denominator == 1:
            body = f"{mag.numerator}{_var_part(var, k)}"
        else:
            body = f"{_fmt_rational(mag)}*{_var_part(var, k)}"
        out.append((sign, body))
    return out


def _join(terms: list[tuple[str, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for idx, (sign, body) in enumerate(terms):
        if idx == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts)


def format_poly(p: Poly, var: str = "x") -> str:
    """Descending powers, unit coefficients elided, no ``+-``."""
    return _join(_signed_terms(p, var))


def format_ratfunc(r: RationalFunc, var: str = "x") -> str:
    if r.den == Poly.constant(1):
        return format_poly(r.num, var)
    return f"({format_poly(r.num, var)})/({format_poly(r.den, var)})"


def _coefficient_prefix(p: Poly, var: str) -> tuple[str, str]:
    """Render ``p`` as the coefficient of a non-constant factor, e.g. ``2*`` or ``(x+1)*``."""
    terms = _signed_terms(p, var)
    if len(terms) == 1:
        sign, body = terms[0]
        return sign, ("" if body == "1" else body + "*")
    return "+", f"({format_poly(p, var)})*"


def _render_product(terms: list[tuple[Poly, str]], var: str) -> str:
    """Join ``coefficient * tail`` terms; an empty tail means a bare polynomial."""
    out: list[tuple[str, str]] = []
    for p, tail in terms:
        if not tail:
            out.extend(_signed_terms(p, var))
            continue
        sign, prefix = _coefficient_prefix(p, var)
        out.append((sign, prefix + tail))
    return _join(out)


def format_op(op: DiffOp) -> str:
    terms = []
    for k in range(op.order, -1, -1):
        a = as_poly(op.coeffs[k])
        if a.is_zero():
            continue
        terms.append((a, "" if k == 0 else _var_part("D", k)))
    return _render_product(terms, "x")


def format_exppoly(f: ExpPoly, var: str = "x") -> str:
    terms = []
    for q, s in reversed(f.terms):
        terms.append((q, "" if s.is_zero() else f"exp({format_poly(s, var)})"))
    return _render_product(terms, var)
