"""Dense univariate polynomials over an exact coefficient domain.

Coefficients may be ``Fraction``, ``NFElement`` or another polynomial type
(``UPoly``/``MPoly``) when the polynomial lives over a ring such as Q[x].
Division-based routines (``divmod``, ``gcd``) need a field; ``exquo`` only
needs exact division in the coefficient ring.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterable, Sequence

from .scalars import exact_div, inverse, is_zero, to_exact


class UPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any], var: str = "T"):
        cs = [to_exact(c) for c in coeffs]
        while cs and is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, coeff, exp: int, var: str = "T") -> "UPoly":
        return cls([coeff * 0] * exp + [coeff], var)

    @classmethod
    def from_roots(cls, roots: Sequence[Any], var: str = "T") -> "UPoly":
        """Monic polynomial prod (T - r)."""
        p = cls([Fraction(1)], var)
        for r in roots:
            p = p * cls([-r, r * 0 + 1], var)
        return p

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if other == 0 or isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly([other], self.var).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "UPoly":
        if isinstance(other, UPoly):
            return other
        return UPoly([other], self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([_add(self[i], other[i]) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return UPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UPoly([], self.var)
        out: list = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                t = a * b
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        zero = self.coeffs[0] * 0
        return UPoly([zero if c is None else c for c in out], self.var)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = UPoly([self.coeffs[0] * 0 + 1 if self.coeffs else Fraction(1)], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "UPoly":
        return UPoly([x * c for x in self.coeffs], self.var)

    # -- division -------------------------------------------------------
    def __divmod__(self, other: "UPoly"):
        """Euclidean division; the divisor's leading coefficient is inverted."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv = inverse(other.lc)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly([], self.var), self
        quot = [None] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] * inv
            quot[i] = c
            if is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        return UPoly(quot, self.var), UPoly(rem[: other.degree], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other) -> "UPoly":
        """Exact quotient over a coefficient ring (no field inverse needed)."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if self.is_zero():
                return UPoly([], self.var)
            raise ArithmeticError("inexact polynomial division")
        quot = [None] * (dq + 1)
        for i in range(dq, -1, -1):
            c = exact_div(rem[i + other.degree], other.lc)
            quot[i] = c
            if is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - c * b
        if any(not is_zero(c) for c in rem[: other.degree]):
            raise ArithmeticError("inexact polynomial division")
        return UPoly(quot, self.var)

    def __truediv__(self, other):
        if isinstance(other, UPoly):
            return self.exquo(other)
        inv = inverse(to_exact(other))
        return UPoly([c * inv for c in self.coeffs], self.var)

    # -- calculus and evaluation ---------------------------------------
    def deriv(self) -> "UPoly":
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x * 0
        return acc

    def compose(self, other: "UPoly") -> "UPoly":
        acc = UPoly([], other.var)
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly([fn(c) for c in self.coeffs], self.var)

    # -- gcd machinery (field coefficients) ----------------------------
    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        return self.scale(inverse(self.lc))

    def gcd(self, other: "UPoly") -> "UPoly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "UPoly"):
        """Return (g, s, t) with s*self + t*other = g, g monic."""
        one = UPoly([Fraction(1)], self.var)
        zero = UPoly([], self.var)
        r0, r1 = self, self._coerce(other)
        s0, s1, t0, t1 = one, zero, zero, one
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = inverse(r0.lc)
        return r0.scale(inv), s0.scale(inv), t0.scale(inv)

    def squarefree_part(self) -> "UPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.deriv())
        return (self // g).monic()

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return True
        return self.gcd(self.deriv()).degree == 0

    # -- display --------------------------------------------------------
    def __repr__(self):
        return f"UPoly({list(self.coeffs)!r}, {self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if is_zero(c):
                continue
            parts.append(_term_str(c, self.var, i))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


def _add(a, b):
    return a + b


def _term_str(c, var: str, i: int) -> str:
    mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
    if isinstance(c, Fraction):
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"
    cs = f"({c})"
    return cs if not mono else f"{cs}*{mono}"


def gcd(p: UPoly, q: UPoly) -> UPoly:
    return p.gcd(q)


def squarefree_part(p: UPoly) -> UPoly:
    return p.squarefree_part()


def is_squarefree(p: UPoly) -> bool:
    return p.is_squarefree()


def _small_primes(start: int = 101):
    n = start
    while True:
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            yield n
        n += 1


def rational_roots(p: UPoly) -> list[Fraction]:
    """All rational roots of a polynomial with rational coefficients.

    Exact: the roots of the integer monic transform are located modulo a
    prime at which they stay simple, Hensel-lifted past a root bound and then
    confirmed by exact evaluation. Nothing is factored beyond linear factors.
    """
    if p.degree <= 0:
        return []
    if not all(isinstance(c, Fraction) for c in p.coeffs):
        raise TypeError("rational_roots needs rational coefficients")
    roots: list[Fraction] = []
    if is_zero(p.coeffs[0]):
        roots.append(Fraction(0))
        k = next(i for i, c in enumerate(p.coeffs) if not is_zero(c))
        p = UPoly(p.coeffs[k:], p.var)
        if p.degree <= 0:
            return roots
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    n = len(ints) - 1
    lead = ints[n]
    # G(y) = lead^(n-1) F(y / lead) is monic with integer coefficients
    g = [ints[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    dg = [i * g[i] for i in range(1, n + 1)]
    bound = 1 + max(abs(c) for c in g)

    def ev(cs, x, m):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % m
        return acc

    for prime in _small_primes():
        if lead % prime == 0:
            continue
        base = [r for r in range(prime) if ev(g, r, prime) == 0]
        if any(ev(dg, r, prime) == 0 for r in base):
            continue
        break
    found = set()
    for r in base:
        mod = prime
        while mod <= 2 * bound:
            mod = mod * mod
            r = (r - ev(g, r, mod) * pow(ev(dg, r, mod), -1, mod)) % mod
        y = r - mod if r > mod // 2 else r
        if sum(c * y ** i for i, c in enumerate(g)) == 0:
            found.add(Fraction(y, lead))
    roots.extend(found)
    return sorted(roots)
