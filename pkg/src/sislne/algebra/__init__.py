"""Exact algebra kernel: rationals, polynomials, resultants, number fields."""
from fractions import Fraction as Rational

from .mpoly import MPoly, homogeneous_components, partial_derivative
from .numberfield import NFElement, NumberField, SplitEvent, crt_combine, decide_zero
from .parser import ParseError, parse_polynomial
from .resultant import bareiss_det, resultant, sylvester_matrix
from .upoly import UPoly, gcd, is_squarefree, rational_roots, squarefree_part

gcd_univariate = gcd


def numberfield_invert(e: NFElement) -> NFElement:
    return e.inverse()


__all__ = [
    "MPoly",
    "NFElement",
    "NumberField",
    "ParseError",
    "Rational",
    "SplitEvent",
    "UPoly",
    "bareiss_det",
    "crt_combine",
    "decide_zero",
    "gcd",
    "gcd_univariate",
    "homogeneous_components",
    "is_squarefree",
    "numberfield_invert",
    "parse_polynomial",
    "partial_derivative",
    "rational_roots",
    "resultant",
    "squarefree_part",
    "sylvester_matrix",
]
