"""Coefficient-domain helpers shared by the polynomial types.

Rationals are ``fractions.Fraction``. Floats are refused everywhere in the
exact layer.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Integral


def to_exact(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, Fraction):
        return c
    if isinstance(c, Integral):
        return Fraction(int(c))
    if isinstance(c, (float, complex)):
        raise TypeError(f"inexact value {c!r} in exact arithmetic")
    if hasattr(c, "is_zero"):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def is_zero(c) -> bool:
    if isinstance(c, (Fraction, int)):
        return c == 0
    return c.is_zero()


def inverse(c):
    if isinstance(c, (Fraction, int)):
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / Fraction(c)
    return c.inverse()


def exact_div(a, b):
    """a / b where the quotient is known to exist in the coefficient ring."""
    if hasattr(b, "exquo"):
        if not hasattr(a, "exquo"):
            a = b._coerce(a)
        return a.exquo(b)
    if hasattr(a, "exquo"):
        return a * inverse(b)
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a / b
    return a * inverse(b)
