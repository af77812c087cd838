"""``pastrev``: command-line front end for polynomials, numerals and operators."""
from __future__ import annotations

import argparse
import json
import sys

from . import cheb, diffop, natnum, poly
from .diffop import CONSTANTS, POLYNOMIALS, DiffOp
from .errors import DomainError, ParseError
from .exactfield import format_scalar, is_gaussian
from .grammar import (format_exppoly, format_op, format_poly, format_ratfunc, parse_exppoly,
                      parse_factored, parse_op, parse_poly, parse_scalar)
from .natnum import Numeral
from .propcheck import reports_json, run_all, suite_passed

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class Output:
    """Collects one command's result as text lines and a JSON payload."""

    def __init__(self, lines, payload):
        self.lines = [lines] if isinstance(lines, str) else list(lines)
        self.payload = payload

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, sort_keys=True, indent=2, ensure_ascii=False)
        return "\n".join(self.lines)


def _poly_out(p: poly.Poly, var: str = "x") -> Output:
    text = format_poly(p, var)
    return Output(text, {"result": text, "coeffs": [format_scalar(c) for c in p.coeffs]})


def _op_out(op: DiffOp) -> Output:
    text = format_op(op)
    return Output(text, {"result": text, "ring": op.ring.name,
                         "coeffs": [_coeff_text(c) for c in op.coeffs]})


def _coeff_text(c) -> str:
    return format_poly(c) if isinstance(c, poly.Poly) else format_scalar(c)


def _value_out(value) -> Output:
    if isinstance(value, bool):
        text = str(value).lower()
    else:
        text = str(value)
    return Output(text, {"result": value})


def _unify(*ops: DiffOp) -> list[DiffOp]:
    # a constant operator meets a polynomial one by lifting its coefficients
    if all(op.ring is CONSTANTS for op in ops):
        return list(ops)
    if any(is_gaussian(c) for op in ops if op.ring is CONSTANTS for c in op.coeffs):
        raise DomainError("Gaussian coefficients cannot be combined with polynomial ones")
    return [op if op.ring is POLYNOMIALS else DiffOp(POLYNOMIALS, op.coeffs) for op in ops]


# -- poly -----------------------------------------------------------------

def _poly_cmd(args) -> Output:
    verb = args.verb
    if verb in ("expand", "reverse-factored", "pairing"):
        f = parse_factored(args.factors, args.unit)
        if verb == "expand":
            return _poly_out(poly.expand(f))
        if verb == "reverse-factored":
            g = poly.reverse_factored(f)
            factors = [f"{format_scalar(b)}:{format_scalar(a)}" for b, a in g.factors]
            text = format_poly(poly.expand(g))
            return Output([f"unit {format_scalar(g.unit)}", f"factors {' '.join(factors)}",
                           f"expanded {text}"],
                          {"unit": format_scalar(g.unit), "factors": factors, "expanded": text})
        report = poly.root_pairing(f)
        pairs = [[format_scalar(a), format_scalar(b)] for a, b in report.pairs]
        unpaired = [format_scalar(r) for r in report.unpaired]
        lines = [f"symmetry {report.symmetry.value}"]
        lines += [f"pair {a} {b}" for a, b in pairs]
        lines += [f"unpaired {r}" for r in unpaired]
        return Output(lines, {"symmetry": report.symmetry.value, "pairs": pairs,
                              "unpaired": unpaired})
    if verb == "fold":
        return _poly_out(poly.paste_fold([parse_poly(t) for t in args.polys]))
    p = parse_poly(args.p)
    if verb == "cipher":
        return _value_out(poly.cipher(p))
    if verb == "reverse":
        return _poly_out(poly.reverse(p))
    if verb == "flip":
        return _poly_out(poly.raw_coefficient_flip(p))
    if verb == "classify":
        return _value_out(poly.classify(p).value)
    if verb == "reciprocal":
        return _poly_out(poly.reciprocal_conj(p))
    if verb == "divides":
        return _value_out(poly.divides_at(p, parse_scalar(args.c)))
    q = parse_poly(args.q)
    if verb == "paste":
        return _poly_out(poly.paste(p, q))
    return _poly_out(poly.poly_arith(p, q, verb))


# -- nat ------------------------------------------------------------------

def _numeral(text: str, base: int) -> Numeral:
    try:
        return Numeral.parse(text, base)
    except DomainError as exc:
        raise ParseError(str(exc), 0) from None


def _nat_out(n: Numeral) -> Output:
    return Output(str(n), {"result": str(n), "value": str(n.value), "base": n.base})


def _nat_cmd(args) -> Output:
    verb = args.verb
    if verb == "games":
        rows = (natnum.game_nines if args.table == "nines" else natnum.game_repunits)(args.rows)
        return Output([r.text() for r in rows],
                      {"table": args.table, "rows": [r.as_dict() for r in rows]})
    base = args.base
    if verb == "fold":
        return _nat_out(natnum.paste_fold_nat([_numeral(t, base) for t in args.numerals], base))
    n = _numeral(args.n, base)
    if verb == "cipher":
        return _value_out(natnum.cipher_nat(n))
    if verb == "reverse":
        return _nat_out(natnum.reverse_nat(n))
    if verb == "paste":
        return _nat_out(natnum.paste_nat(n, _numeral(args.m, base)))
    if verb == "palindrome":
        return _value_out(natnum.is_palindrome(n))
    return _value_out(natnum.check_eleven(n))


# -- op -------------------------------------------------------------------

def _op_cmd(args) -> Output:
    verb = args.verb
    if verb == "kernel":
        f = parse_factored(args.factors, args.unit)
        rows = []
        for lam, mult in diffop.kernel_exponents(f):
            rows.append({"lambda": format_scalar(lam), "multiplicity": mult,
                         "reversed": None if lam == 0 else format_scalar(1 / lam)})
        lines = []
        for (lam, mult), r in zip(diffop.kernel_exponents(f), rows):
            line = f"{format_exppoly(diffop.exp_witness(lam))} multiplicity {mult}"
            if lam != 0:
                line += f", reversed {format_exppoly(diffop.exp_witness(1 / lam))}"
            lines.append(line)
        return Output(lines, {"operator": format_op(diffop.expand_op(f)), "exponents": rows})
    op = parse_op(args.op)
    if verb == "cipher":
        return _value_out(diffop.op_cipher(op))
    if verb == "reverse":
        return _op_out(diffop.op_reverse(op))
    if verb == "classify":
        return _value_out(diffop.op_classify(op).value)
    if verb == "charpoly":
        return _poly_out(diffop.char_poly(op), "x")
    if verb == "apply":
        text = format_exppoly(diffop.apply(op, parse_exppoly(args.f)))
        return Output(text, {"result": text})
    if verb == "divide":
        s, r = diffop.right_divide_monic_linear(op, parse_scalar(args.c))
        rs = _coeff_text(r)
        return Output([f"quotient {format_op(s)}", f"remainder {rs}"],
                      {"quotient": format_op(s), "remainder": rs})
    if verb == "logderiv":
        u1, u2, prod = (format_ratfunc(u) for u in diffop.log_derivative_product(op))
        return Output([f"u1 {u1}", f"u2 {u2}", f"product {prod}"],
                      {"u1": u1, "u2": u2, "product": prod})
    left, right = _unify(op, parse_op(args.other))
    fn = {"paste": diffop.op_paste, "mul": diffop.op_mul, "add": diffop.op_add}[verb]
    return _op_out(fn(left, right))


# -- cheb -----------------------------------------------------------------

def _cheb_cmd(args) -> Output:
    if args.verb == "T":
        if args.n < 0:
            raise DomainError("n must be nonnegative")
        return _poly_out(cheb.cheb_T(args.n), "w")
    if args.verb == "reduce":
        c = cheb.palindromic_to_cheb(parse_poly(args.p, var="z"))
        coeffs = [format_scalar(v) for v in c.coeffs]
        return Output(f"n={c.n} coeffs=({', '.join(coeffs)})", {"n": c.n, "coeffs": coeffs})
    c = cheb.ChebExpansion(tuple(parse_scalar(t) for t in args.coeffs))
    return _poly_out(cheb.cheb_to_palindromic(c), "z")


# -- verify ---------------------------------------------------------------

def _verify_cmd(args) -> tuple[Output, int]:
    only = None
    if args.only:
        only = [i for chunk in args.only for i in chunk.split(",") if i]
    reports = run_all(args.seed, only=only, cases=args.cases, timing=args.timing,
                      jobs=args.jobs)
    ok = suite_passed(reports)
    lines = []
    for r in reports:
        status = "ok" if r.passed else "FAIL"
        extra = f" discrepancies={len(r.discrepancies)}" if r.discrepancies else ""
        lines.append(f"{status:4} {r.id:12} {r.kind:8} cases={r.cases} "
                     f"failures={len(r.failures)}{extra}")
    lines.append(f"suite {'passed' if ok else 'failed'} (seed {args.seed})")
    out = Output(lines, None)
    out.render_json = lambda: reports_json(args.seed, reports)
    return out, EXIT_OK if ok else EXIT_VERIFY


# -- argument parsing -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(
        prog="pastrev", parents=[common],
        description="Exact Pasting and Reversing of polynomials, numerals and operators.",
        epilog="Arguments starting with '-' (e.g. \"-x+1\") go after a '--' separator.")
    nouns = parser.add_subparsers(dest="noun", required=True)

    def verbs(noun, help_text):
        sub = nouns.add_parser(noun, help=help_text, parents=[common])
        return sub.add_subparsers(dest="verb", required=True)

    def add(group, name, *positional, help_text=None, **nargs):
        sub = group.add_parser(name, help=help_text, parents=[common])
        for arg in positional:
            sub.add_argument(arg, nargs=nargs.get(arg))
        return sub

    g = verbs("poly", "polynomials over Q or Q(i)")
    add(g, "cipher", "p", help_text="number of coefficients")
    add(g, "reverse", "p", help_text="Reversing (needs a nonzero constant term)")
    add(g, "flip", "p", help_text="raw coefficient flip, no hypothesis on the constant term")
    add(g, "classify", "p")
    add(g, "reciprocal", "p", help_text="conjugate the coefficients, then reverse")
    add(g, "divides", "p", "c", help_text="is x - c a factor")
    add(g, "paste", "p", "q", help_text="x^cipher(q) p + q")
    add(g, "fold", "polys", help_text="right fold of Pasting", polys="+")
    for name in ("add", "sub", "mul"):
        add(g, name, "p", "q")
    for name in ("expand", "reverse-factored", "pairing"):
        sub = add(g, name, "factors", help_text="unit * prod(beta x - alpha), given as beta:alpha",
                  factors="*")
        sub.add_argument("--unit", default="1")

    g = verbs("nat", "base-B numerals")
    for name, pos, nargs in (("cipher", ("n",), {}), ("reverse", ("n",), {}),
                             ("paste", ("n", "m"), {}), ("fold", ("numerals",), {"numerals": "+"}),
                             ("palindrome", ("n",), {}), ("eleven", ("n",), {})):
        sub = add(g, name, *pos, **nargs)
        sub.add_argument("--base", type=int, default=10)
    sub = g.add_parser("games", help="the nines and repunit identity tables", parents=[common])
    sub.add_argument("table", choices=["nines", "repunits"])
    sub.add_argument("--rows", type=int, default=9)

    g = verbs("op", "linear differential operators in D")
    add(g, "cipher", "op")
    add(g, "reverse", "op")
    add(g, "classify", "op")
    add(g, "charpoly", "op", help_text="characteristic polynomial of a constant operator")
    add(g, "apply", "op", "f", help_text="image of an exp-polynomial such as \"x*exp(2x)\"")
    add(g, "divide", "op", "c", help_text="right division by D + c")
    add(g, "logderiv", "op", help_text="log-derivative product for an order-1 operator")
    add(g, "paste", "op", "other", help_text="op D^cipher(other) + other")
    add(g, "mul", "op", "other", help_text="composition op o other")
    add(g, "add", "op", "other")
    sub = add(g, "kernel", "factors", help_text="exponents of unit * prod(beta D - alpha)",
              factors="+")
    sub.add_argument("--unit", default="1")

    g = verbs("cheb", "Chebyshev reduction of palindromic polynomials in z")
    sub = g.add_parser("T", help="Chebyshev polynomial T_n in w", parents=[common])
    sub.add_argument("n", type=int)
    add(g, "reduce", "p", help_text="expansion coefficients c_0..c_n")
    add(g, "expand", "coeffs", help_text="palindromic polynomial from c_0..c_n", coeffs="+")

    v = nouns.add_parser("verify", help="run the property suite", parents=[common])
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--cases", type=int, default=None,
                   help="override the case count of randomized properties")
    v.add_argument("--only", action="append", help="property ids, comma separated")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="record wall time per property")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", None) or ("json" if args.noun == "verify" else "text")
    try:
        if args.noun == "verify":
            out, code = _verify_cmd(args)
            print(out.render_json() if fmt == "json" else out.render("text"))
            return code
        handler = {"poly": _poly_cmd, "nat": _nat_cmd, "op": _op_cmd, "cheb": _cheb_cmd}
        out = handler[args.noun](args)
    except ParseError as exc:
        print(f"pastrev: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ZeroDivisionError) as exc:
        print(f"pastrev: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out.render(fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
