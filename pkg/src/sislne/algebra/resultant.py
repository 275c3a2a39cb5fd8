"""Sylvester matrices, fraction-free determinants and resultants."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import exact_div, is_zero
from .upoly import UPoly


def bareiss_det(matrix: Sequence[Sequence]):
    """Determinant by Bareiss elimination; entries from any exact domain.

    Only exact division by the previous pivot is needed, so the routine works
    over Q, over number fields and over polynomial rings.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not is_zero(a[i][k])), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else exact_div(num, prev)
            a[i][k] = a[i][k] * 0
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _padded(p: UPoly, deg: int | None, zero) -> tuple[int, list]:
    if deg is None:
        return p.degree, list(reversed(p.coeffs))
    if deg < p.degree:
        raise ValueError(f"declared degree {deg} is below the actual degree {p.degree}")
    return deg, [zero] * (deg - p.degree) + list(reversed(p.coeffs))


def sylvester_matrix(p: UPoly, q: UPoly, degrees: tuple[int, int] | None = None) -> list[list]:
    """Rows of p's coefficients first (deg q of them), then q's (deg p rows).

    ``degrees`` declares formal degrees, padding with leading zeros; this is
    the matrix whose determinant is the resultant of a family specialized at
    a point where a leading coefficient vanishes.
    """
    zero = (p.lc * 0) if p.coeffs else Fraction(0)
    dp, dq = degrees if degrees is not None else (None, None)
    m, pc = _padded(p, dp, zero)
    n, qc = _padded(q, dq, zero)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: UPoly, q: UPoly, degrees: tuple[int, int] | None = None):
    """Res(p, q) as the Sylvester determinant with p's rows first."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if p.var != q.var:
        raise ValueError(f"variable mismatch {p.var} vs {q.var}")
    return bareiss_det(sylvester_matrix(p, q, degrees))


def discriminant_like(p: UPoly):
    """Res(p, p') -- vanishes iff p has a repeated root."""
    return resultant(p, p.deriv())
