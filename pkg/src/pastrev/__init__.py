"""Exact Pasting and Reversing over polynomials, numerals and differential operators."""
from .errors import DomainError, ParseError, VerificationError
from .exactfield import GaussianRational, Rational, conj, field_arith
from .poly import (FactoredLinear, PairingReport, Poly, Symmetry, cipher, classify,
                   divides_at, expand, paste, paste_fold, poly_arith, raw_coefficient_flip,
                   reciprocal_conj, reverse, reverse_factored, root_pairing)
from .ratfunc import RationalFunc
from .cheb import ChebExpansion, cheb_T, cheb_to_palindromic, palindromic_to_cheb
from .natnum import (Numeral, check_eleven, cipher_nat, game_nines, game_repunits,
                     is_palindrome, paste_fold_nat, paste_nat, reverse_nat)
from .diffop import (CONSTANTS, POLYNOMIALS, DiffOp, DiffRing, ExpPoly, apply, char_poly,
                     kernel_exponents, log_derivative_product, op_add, op_classify, op_mul,
                     op_paste, op_reverse, right_divide_monic_linear)
from .grammar import format_op, format_poly, parse_exppoly, parse_op, parse_poly

__version__ = "0.1.0"
