"""Sparse multivariate polynomials with exact coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import exact_div, is_zero, to_exact
from .upoly import UPoly

Exponent = tuple


class MPoly:
    """Immutable map exponent-vector -> nonzero coefficient.

    ``variables`` fixes the meaning of each exponent slot. Two polynomials
    combine only when their variable tuples agree.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object] | None = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            c = to_exact(c)
            if not is_zero(c):
                clean[exp] = c
        self.terms: dict = clean

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MPoly":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "MPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str, coeff=Fraction(1)) -> "MPoly":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exp: coeff})

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exp: Exponent):
        return self.terms.get(tuple(exp), Fraction(0))

    def coefficients(self):
        return list(self.terms.values())

    def sorted_terms(self):
        """Terms in graded-lex order, highest first (deterministic)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def leading_term(self):
        return max(self.terms.items(), key=lambda t: t[0])

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.constant(self.variables, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        return MPoly.constant(self.variables, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            other = to_exact(other)
            return MPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t = c1 * c2
                out[e] = out[e] + t if e in out else t
        return MPoly(self.variables, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = MPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            return self.exquo(other)
        from .scalars import inverse

        return self * inverse(to_exact(other))

    def exquo(self, other) -> "MPoly":
        """Exact division; raises ArithmeticError if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lexp, lc = other.leading_term()
        rem = self
        quot: dict = {}
        while not rem.is_zero():
            rexp, rc = rem.leading_term()
            qexp = tuple(a - b for a, b in zip(rexp, lexp))
            if any(e < 0 for e in qexp):
                raise ArithmeticError("inexact polynomial division")
            qc = exact_div(rc, lc)
            quot[qexp] = qc
            rem = rem - MPoly(self.variables, {qexp: qc}) * other
        return MPoly(self.variables, quot)

    # -- structure ------------------------------------------------------
    def homogeneous_components(self) -> dict[int, "MPoly"]:
        comps: dict[int, dict] = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: MPoly(self.variables, comps[d]) for d in sorted(comps)}

    def diff(self, name: str) -> "MPoly":
        i = self.variables.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            out[ne] = c * e[i]
        return MPoly(self.variables, out)

    def map_coeffs(self, fn) -> "MPoly":
        return MPoly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def evaluate(self, values: Sequence | Mapping):
        """Evaluate at a full point; coefficients and values must mix."""
        if isinstance(values, Mapping):
            values = [values[v] for v in self.variables]
        values = list(values)
        acc = None
        powers: list[dict[int, object]] = [{} for _ in values]
        for e, c in self.sorted_terms():
            t = c
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = values[i] ** k
                        powers[i][k] = p
                    t = t * p
            acc = t if acc is None else acc + t
        if acc is None:
            return Fraction(0) if not values else values[0] * 0
        return acc

    def substitute(self, mapping: Mapping[str, "MPoly"], variables: Sequence[str]) -> "MPoly":
        """Compose: replace each variable by a polynomial in ``variables``."""
        variables = tuple(variables)
        images = []
        for v in self.variables:
            img = mapping.get(v)
            if img is None:
                img = MPoly.var(variables, v)
            elif not isinstance(img, MPoly):
                img = MPoly.constant(variables, img)
            images.append(img)
        cache: list[dict[int, MPoly]] = [{0: MPoly.constant(variables, 1)} for _ in images]

        def power(i, k):
            got = cache[i].get(k)
            if got is None:
                got = power(i, k - 1) * images[i]
                cache[i][k] = got
            return got

        acc = MPoly.zero(variables)
        for e, c in self.sorted_terms():
            t = MPoly.constant(variables, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            acc = acc + t
        return acc

    def rename(self, variables: Sequence[str]) -> "MPoly":
        if len(variables) != len(self.variables):
            raise ValueError("arity mismatch")
        return MPoly(variables, self.terms)

    def to_upoly(self, name: str) -> UPoly:
        """Univariate view; every other variable must be absent."""
        i = self.variables.index(name)
        coeffs: dict[int, object] = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"polynomial is not univariate in {name}")
            coeffs[e[i]] = c
        n = max(coeffs, default=-1)
        return UPoly([coeffs.get(j, Fraction(0)) for j in range(n + 1)], name)

    def as_upoly_over(self, name: str) -> UPoly:
        """View as a polynomial in ``name`` with MPoly coefficients (same variables)."""
        i = self.variables.index(name)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        n = max(buckets, default=-1)
        return UPoly([MPoly(self.variables, buckets.get(j, {})) for j in range(n + 1)], name)

    # -- display --------------------------------------------------------
    def __repr__(self):
        return f"MPoly({self.variables}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k
            )
            if isinstance(c, Fraction):
                if not mono:
                    s = str(c)
                elif c == 1:
                    s = mono
                elif c == -1:
                    s = "-" + mono
                else:
                    s = f"{c}*{mono}"
            else:
                s = f"({c})" + (f"*{mono}" if mono else "")
            out.append(s)
        return " + ".join(out).replace("+ -", "- ")


def homogeneous_components(p: MPoly) -> dict[int, MPoly]:
    return p.homogeneous_components()


def partial_derivative(p: MPoly, variable: str) -> MPoly:
    if variable not in p.variables:
        raise ValueError(f"{variable!r} is not a variable of the polynomial")
    return p.diff(variable)


def product(polys: Iterable[MPoly], variables: Sequence[str]) -> MPoly:
    acc = MPoly.constant(variables, 1)
    for p in polys:
        acc = acc * p
    return acc
