"""Arithmetic in Q[t]/(m) for squarefree, not necessarily irreducible m.

Inverting a zero divisor raises :class:`SplitEvent` carrying the factor pair
discovered by the gcd (dynamic evaluation). Callers re-run the computation in
each factor field.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import to_exact
from .upoly import UPoly


class SplitEvent(ArithmeticError):
    """The modulus factors as ``first * second``; recompute in each branch."""

    def __init__(self, modulus: UPoly, first: UPoly, second: UPoly):
        self.modulus = modulus
        self.first = first.monic()
        self.second = second.monic()
        super().__init__(f"modulus {modulus} splits as ({self.first})*({self.second})")

    @property
    def factors(self) -> tuple[UPoly, UPoly]:
        return self.first, self.second


class NumberField:
    __slots__ = ("modulus", "name", "_one", "_zero")

    def __init__(self, modulus: UPoly, name: str = "t", check: bool = True):
        if modulus.degree < 1:
            raise ValueError("modulus must be nonconstant")
        modulus = UPoly(modulus.coeffs, name).monic()
        if check and not modulus.is_squarefree():
            raise ValueError(f"modulus {modulus} is not squarefree")
        self.modulus = modulus
        self.name = name
        self._zero = NFElement(self, UPoly([], name))
        self._one = NFElement(self, UPoly([Fraction(1)], name))

    @classmethod
    def rational(cls, name: str = "t") -> "NumberField":
        """Degree-one field Q[t]/(t), a copy of Q."""
        return cls(UPoly([Fraction(0), Fraction(1)], name), name)

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def zero(self) -> "NFElement":
        return self._zero

    @property
    def one(self) -> "NFElement":
        return self._one

    @property
    def gen(self) -> "NFElement":
        return self(UPoly([Fraction(0), Fraction(1)], self.name))

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, UPoly):
            return NFElement(self, UPoly(value.coeffs, self.name) % self.modulus)
        return NFElement(self, UPoly([to_exact(value)], self.name))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus.coeffs == other.modulus.coeffs

    def __hash__(self):
        return hash(self.modulus.coeffs)

    def __repr__(self):
        return f"NumberField({self.modulus})"


class NFElement:
    __slots__ = ("field", "rep")

    def __init__(self, field: NumberField, rep: UPoly):
        self.field = field
        self.rep = rep

    def _other(self, other) -> UPoly:
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different number fields")
            return other.rep
        return UPoly([to_exact(other)], self.field.name)

    def __add__(self, other):
        if hasattr(other, "exquo"):
            return NotImplemented
        return NFElement(self.field, self.rep + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        if hasattr(other, "exquo"):
            return NotImplemented
        return NFElement(self.field, self.rep - self._other(other))

    def __rsub__(self, other):
        return NFElement(self.field, self._other(other) - self.rep)

    def __neg__(self):
        return NFElement(self.field, -self.rep)

    def __mul__(self, other):
        if hasattr(other, "exquo"):
            return NotImplemented
        if isinstance(other, NFElement):
            return NFElement(self.field, (self.rep * self._other(other)) % self.field.modulus)
        return NFElement(self.field, self.rep.scale(to_exact(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, NFElement):
            return self * other.inverse()
        return self * (1 / to_exact(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def inverse(self) -> "NFElement":
        if self.rep.is_zero():
            raise ZeroDivisionError("inverse of zero in number field")
        m = self.field.modulus
        g, s, _ = self.rep.xgcd(m)
        if g.degree > 0:
            raise SplitEvent(m, g, m // g)
        return NFElement(self.field, s % m)

    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.rep[0]

    def restrict(self, field: NumberField) -> "NFElement":
        """Image under Q[t]/(m) -> Q[t]/(m') for a factor m' of m."""
        return NFElement(field, UPoly(self.rep.coeffs, field.name) % field.modulus)

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.rep == other.rep
        try:
            return self.rep == UPoly([to_exact(other)], self.field.name)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def __repr__(self):
        return f"NFElement({self.rep} mod {self.field.modulus})"

    def __str__(self):
        return str(self.rep)


def decide_zero(c) -> bool:
    """Zero test valid on every branch: True if zero, False if a unit.

    Raises SplitEvent when ``c`` is a nonzero zero divisor.
    """
    if isinstance(c, NFElement):
        if c.is_zero():
            return True
        c.inverse()
        return False
    return to_exact(c) == 0


def crt_combine(a: NFElement, b: NFElement) -> NFElement:
    """Recombine values from coprime factor fields into Q[t]/(m1*m2)."""
    m1, m2 = a.field.modulus, b.field.modulus
    g, s, _ = m1.xgcd(m2)
    if g.degree != 0:
        raise ValueError("moduli are not coprime")
    # x = a + m1 * ((b - a) * m1^{-1} mod m2)
    m = m1 * m2
    field = NumberField(m, a.field.name, check=False)
    delta = ((UPoly(b.rep.coeffs, m1.var) - a.rep) * s) % m2
    return NFElement(field, (a.rep + m1 * delta) % m)
