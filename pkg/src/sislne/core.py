"""Superisolated singularities f_d + f_{d+1} = 0 and their LNE verdict."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import MPoly, decide_zero, parse_polynomial
from .curves import (
    VARS,
    ComponentData,
    CurveError,
    SingularPointRecord,
    analyze_curve,
    bezout_defect,
    geometric_count,
    is_squarefree_homogeneous,
    refine,
    validate_components,
)

CASE1 = "Case1-lineArrangement"
CASE2 = "Case2"


class InputError(ValueError):
    pass


class NotApplicableError(ValueError):
    """Raised when an operation needs an LNE (ordinary) tangent cone."""


@dataclass(frozen=True)
class SisInput:
    f_d: MPoly
    f_d1: MPoly
    factors: tuple[MPoly, ...] | None = None
    factor_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        for name, p in (("f_d", self.f_d), ("f_{d+1}", self.f_d1)):
            if tuple(p.variables) != VARS:
                raise InputError(f"{name} must be a polynomial in x, y, z")
            if p.is_zero():
                raise InputError(f"{name} is zero")
            if not p.is_homogeneous():
                raise InputError(f"{name} is not homogeneous")
        if self.f_d.degree < 2:
            raise InputError("f_d must have degree at least 2")
        if self.f_d1.degree != self.f_d.degree + 1:
            raise InputError(
                f"f_{{d+1}} has degree {self.f_d1.degree}, expected {self.f_d.degree + 1}"
            )
        if not is_squarefree_homogeneous(self.f_d):
            raise InputError("f_d has a repeated factor: the tangent cone is not reduced")

    @property
    def d(self) -> int:
        return self.f_d.degree

    @property
    def equation(self) -> MPoly:
        return self.f_d + self.f_d1

    @classmethod
    def from_strings(cls, fd: str, fd1: str, factors: Sequence[str] | None = None) -> "SisInput":
        f_d = parse_polynomial(fd, VARS)
        f_d1 = parse_polynomial(fd1, VARS)
        facs = None
        labels = None
        if factors is not None:
            facs = tuple(parse_polynomial(s, VARS) for s in factors)
            labels = tuple(factors)
        return cls(f_d, f_d1, facs, labels)

    @classmethod
    def from_factors(cls, factors: Sequence[str], fd1: str) -> "SisInput":
        polys = [parse_polynomial(s, VARS) for s in factors]
        f_d = MPoly.constant(VARS, 1)
        for p in polys:
            f_d = f_d * p
        return cls(f_d, parse_polynomial(fd1, VARS), tuple(polys), tuple(factors))

    @classmethod
    def from_equation(cls, text: str) -> "SisInput":
        """Split a full equation into f_d + f_{d+1}; longer tails are refused."""
        f = parse_polynomial(text, VARS)
        comps = f.homogeneous_components()
        degs = list(comps)
        if len(degs) != 2 or degs[1] != degs[0] + 1:
            raise InputError(
                "equation must be exactly f_d + f_{d+1} (two consecutive homogeneous "
                f"parts); got degrees {degs}. Equations with nonzero f_{{d+2}}, ... are "
                "outside the proven statement and are not truncated."
            )
        return cls(comps[degs[0]], comps[degs[1]])


@dataclass(frozen=True)
class PolarCounts:
    per_point: tuple[int, ...]  # k_i - 1 per record (each stands for record.degree points)
    n0: int
    case_tag: str


@dataclass(frozen=True)
class SisReport:
    d: int
    superisolated: bool
    lne: bool | None
    records: tuple[SingularPointRecord, ...]
    r: int
    case_tag: str | None = None
    polar: PolarCounts | None = None
    witness: SingularPointRecord | None = None
    components: ComponentData | None = None
    input: SisInput | None = field(default=None, compare=False, repr=False)

    @property
    def n0(self) -> int | None:
        return self.polar.n0 if self.polar else None

    def k_list(self) -> list[int]:
        """Multiplicity of every geometric singular point."""
        out = []
        for rec in self.records:
            out.extend([rec.multiplicity] * rec.degree)
        return out


def check_superisolated(inp: SisInput, records: Sequence[SingularPointRecord]):
    """(superisolated?, refined records, per-record flag f_{d+1}(p) != 0)."""
    pairs = refine(
        inp.f_d, records, lambda rec: not decide_zero(inp.f_d1.evaluate(rec.point.coords))
    )
    recs = tuple(r for r, _ in pairs)
    flags = tuple(ok for _, ok in pairs)
    return all(flags), recs, flags


def polar_counts(report: SisReport) -> PolarCounts:
    if not report.lne:
        raise NotApplicableError("polar counts need an ordinary tangent cone (lne = yes)")
    n0 = bezout_defect(report.records, report.d)
    if n0 < 0:
        raise CurveError("internal: negative smooth-polar count")
    per_point = tuple(r.multiplicity - 1 for r in report.records)
    return PolarCounts(per_point, n0, CASE1 if n0 == 0 else CASE2)


def decide_lne(inp: SisInput, shear_start: int = 0) -> SisReport:
    """LNE verdict: yes iff superisolated and every singular point of the tangent cone is ordinary."""
    records = tuple(analyze_curve(inp.f_d, shear_start))
    components = None
    # each pass can only split records further, so this settles quickly
    while True:
        if inp.factors is not None:
            components = validate_components(inp.f_d, inp.factors, records, inp.factor_labels)
            records = components.records
        sis, refined, flags = check_superisolated(inp, records)
        if len(refined) == len(records):
            records = refined
            break
        records = refined
    r = geometric_count(records)
    if not sis:
        witness = next(rec for rec, ok in zip(records, flags) if not ok) if flags else None
        return SisReport(inp.d, False, None, tuple(records), r, witness=witness,
                         components=components, input=inp)
    bad = [rec for rec in records if not rec.ordinary]
    if bad:
        return SisReport(inp.d, True, False, tuple(records), r, witness=bad[0],
                         components=components, input=inp)
    report = SisReport(inp.d, True, True, tuple(records), r, components=components, input=inp)
    polar = polar_counts(report)
    if components is not None:
        lines_only = all(deg == 1 for _label, deg, _col in components.expanded())
        if lines_only != (polar.n0 == 0):
            raise CurveError(
                "internal: Case tag from the Bezout count disagrees with component degrees"
            )
    return SisReport(inp.d, True, True, tuple(records), r, polar.case_tag, polar,
                     components=components, input=inp)
