"""Verification kernels for the polar-curve claims and outer contact exponents.

Claims about the pencil ``tP + Q`` and the resultant of ``P`` and ``Q`` are
checked exactly. Outer contact exponents are estimated with mpmath at a
working precision of at least 50 digits (``SIS_PRECISION`` overrides it).
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .algebra import MPoly, NFElement, UPoly, decide_zero, resultant
from .core import SisInput, SisReport
from .curves import VARS, SingularPointRecord, refine

DEFAULT_PRECISION = 50
# fixed sequence of test-curve parameters tried in order
MU_SEQUENCE = (Fraction(1), Fraction(1, 2), Fraction(2), complex(1, 0.5), Fraction(3), Fraction(-1))
T_SAMPLES = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2))


class NumericError(RuntimeError):
    pass


class PrecisionAdvisory(NumericError):
    """The requested radii are too small for the working precision."""


class BranchSwapError(NumericError):
    """Root tracking could not tell two branches apart."""


class NonGenericMu(NumericError):
    pass


def precision(requested: int | None = None) -> int:
    """Working digits: SIS_PRECISION wins, then ``requested``, then the default."""
    raw = os.environ.get("SIS_PRECISION")
    if raw is None:
        if requested is None:
            return DEFAULT_PRECISION
        if requested < 15:
            raise NumericError("precision below 15 digits is not supported")
        return requested
    try:
        value = int(raw)
    except ValueError:
        raise NumericError(f"SIS_PRECISION must be an integer, got {raw!r}") from None
    if value < 15:
        raise NumericError("SIS_PRECISION below 15 digits is not supported")
    return value


# -- exact polar polynomials -------------------------------------------------

def polar_pair(slopes: UPoly) -> tuple[UPoly, UPoly]:
    """(P, Q) for S = prod (w + a_i): Q = S' and P = k S - w S'."""
    k = slopes.degree
    w = UPoly([slopes.lc * 0, slopes.lc ** 0], slopes.var)
    q = slopes.deriv()
    p = slopes * k - w * q
    return p, q


def polar_pair_from_roots(a: Sequence) -> tuple[UPoly, UPoly]:
    s = UPoly([Fraction(1)], "w")
    for ai in a:
        s = s * UPoly([ai, Fraction(1)], "w")
    return polar_pair(s)


def pairwise_discriminant(a: Sequence):
    """prod over unordered pairs of (a_i - a_j)^2."""
    out = Fraction(1)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            out = out * (a[i] - a[j]) ** 2
    return out


@dataclass
class Claim2Result:
    k: int
    trials: int
    seed: int
    eta: Fraction | None
    ratios: list[Fraction]
    coincident_zero: bool
    symbolic_degree: int | None
    passed: bool
    problems: list[str] = field(default_factory=list)


def _distinct_rationals(rng: random.Random, k: int) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < k:
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if a != 0 and a not in out:
            out.append(a)
    return out


def symbolic_resultant(k: int) -> MPoly:
    """Res(P, Q) as a polynomial in a_1..a_k."""
    names = tuple(f"a{i + 1}" for i in range(k))
    gens = [MPoly.var(names, n) for n in names]
    one = MPoly.constant(names, 1)
    s = UPoly([one], "w")
    for g in gens:
        s = s * UPoly([g, one], "w")
    p, q = polar_pair(s)
    return resultant(p, q)


def claim2_experiment(k: int, trials: int = 20, seed: int = 0, symbolic: bool | None = None) -> Claim2Result:
    if k < 2:
        raise ValueError("k must be at least 2")
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    ratios = []
    for _ in range(trials):
        a = _distinct_rationals(rng, k)
        p, q = polar_pair_from_roots(a)
        # formal degrees: P keeps degree k-1 even when sum(a) = 0
        ratios.append(Fraction(resultant(p, q, (k - 1, k - 1))) / pairwise_discriminant(a))
    problems = []
    eta = ratios[0]
    if any(r != eta for r in ratios):
        problems.append("Res(P,Q)/prod(a_i-a_j)^2 varies across trials")
        eta = None
    elif eta == 0:
        problems.append("eta is zero")
    a = _distinct_rationals(rng, k)
    a[1] = a[0]
    p, q = polar_pair_from_roots(a)
    coincident_zero = resultant(p, q, (k - 1, k - 1)) == 0
    if not coincident_zero:
        problems.append("Res(P,Q) does not vanish when a_1 = a_2")
    degree = None
    if symbolic if symbolic is not None else k <= 4:
        poly = symbolic_resultant(k)
        degree = poly.degree
        if not poly.is_homogeneous() or degree != k * (k - 1):
            problems.append(f"symbolic resultant is not homogeneous of degree {k * (k - 1)}")
    return Claim2Result(k, trials, seed, eta, ratios, coincident_zero, degree, not problems, problems)


@dataclass
class Claim1Result:
    k: int
    samples: list[dict]
    passed: bool
    problems: list[str] = field(default_factory=list)


def claim1_pencil_check(record: SingularPointRecord, t_samples: Sequence[Fraction] = T_SAMPLES) -> Claim1Result:
    """tP + Q is squarefree of degree k-1 for each sampled t.

    Zero tests run in the record's number field and may raise
    :class:`SplitEvent`; :func:`claim1_for_report` handles the branching.
    """
    if not record.ordinary or record.tangent_slopes is None:
        raise ValueError("the pencil check needs an ordinary point")
    k = record.multiplicity
    p, q = polar_pair(record.tangent_slopes)
    samples = []
    problems = []
    for t in t_samples:
        g = p * Fraction(t) + q
        deg = g.degree
        while deg >= 0 and decide_zero(g.coeffs[deg]):
            deg -= 1
        ok_degree = deg == k - 1
        squarefree = ok_degree and (k - 1 == 0 or UPoly(g.coeffs[: deg + 1], g.var).is_squarefree())
        samples.append({"t": str(t), "degree": deg, "squarefree": bool(squarefree)})
        if not squarefree:
            problems.append(f"t={t}: pencil member is not squarefree of degree {k - 1}")
    if decide_zero(resultant(p, q, (k - 1, k - 1))):
        problems.append("P and Q share a root, so members of the pencil meet on the exceptional curve")
    return Claim1Result(k, samples, not problems, problems)


def claim1_for_report(report: SisReport, t_samples: Sequence[Fraction] = T_SAMPLES):
    """(record, result) for every ordinary singular point; other points are skipped."""
    ordinary = [rec for rec in report.records if rec.ordinary]
    return refine(report.input.f_d, ordinary, lambda rec: claim1_pencil_check(rec, t_samples))


# -- numeric embedding --------------------------------------------------------

def _mp(c, theta):
    if isinstance(c, NFElement):
        acc = mpmath.mpc(0)
        for coeff in reversed(c.rep.coeffs):
            acc = acc * theta + mpmath.mpf(coeff.numerator) / coeff.denominator
        return acc
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    if isinstance(c, int):
        return mpmath.mpf(c)
    return mpmath.mpmathify(c)


def modulus_roots(modulus: UPoly) -> list:
    """Numeric roots of the defining polynomial in a deterministic order."""
    if modulus.degree == 1:
        c0, c1 = modulus.coeffs
        return [mpmath.mpc(-_mp(c0, 0) / _mp(c1, 0))]
    coeffs = [_mp(c, 0) for c in reversed(modulus.coeffs)]
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * mpmath.mp.dps)
    roots = [mpmath.mpc(r) for r in roots]
    return sorted(roots, key=_order)


def _order(z):
    # rounding keeps the order stable against last-digit noise
    return (round(float(z.real), 9), round(float(z.imag), 9))


def geometric_points(report: SisReport) -> list[tuple[SingularPointRecord, int]]:
    """(record, conjugate index) for every geometric singular point."""
    out = []
    for rec in report.records:
        for c in range(rec.degree):
            out.append((rec, c))
    return out


@dataclass
class LocalModel:
    k: int
    slopes: list  # a_1..a_k as mpc
    theta: object
    point: list  # numeric coordinates
    e1: list
    e2: list
    f_local: MPoly  # f_d(P + s e1 + w e2), exact, coefficients in the record's field
    h_local: MPoly  # f_{d+1}(P + s e1 + w e2)
    record: SingularPointRecord

    @property
    def P(self) -> list:
        return _poly_from_roots(self.slopes, weights=True)

    @property
    def Q(self) -> list:
        return _poly_from_roots(self.slopes, weights=False)


def _poly_from_roots(a, weights: bool) -> list:
    """Coefficients (high to low) of sum_i c_i prod_{j != i}(w + a_j)."""
    k = len(a)
    total = [mpmath.mpc(0)] * k
    for i in range(k):
        prod = [mpmath.mpc(1)]
        for j in range(k):
            if j != i:
                prod = [x + y for x, y in zip(prod + [0], [0] + [p * a[j] for p in prod])]
        c = a[i] if weights else 1
        total = [t + c * p for t, p in zip(total, prod)]
    return total


def local_model(inp: SisInput, record: SingularPointRecord, conjugate: int = 0) -> LocalModel:
    if not record.ordinary or record.tangent_slopes is None:
        raise ValueError("a local model needs an ordinary point")
    K = record.field
    chart = record.point.chart
    ia, ib = [i for i in range(3) if i != chart]
    alpha, beta = record.local_shear
    names = ("s", "w")
    S = MPoly.var(names, "s")
    W = MPoly.var(names, "w")
    images = {}
    for i, name in enumerate(VARS):
        c = record.point.coords[i]
        img = MPoly.constant(names, c)
        if i == ia:
            img = img + S + W * alpha
        elif i == ib:
            img = img + W + S * beta
        images[name] = img
    f_local = inp.f_d.substitute(images, names).map_coeffs(K)
    h_local = inp.f_d1.substitute(images, names).map_coeffs(K)
    theta = modulus_roots(record.point.modulus)[conjugate]
    point = [_mp(c, theta) for c in record.point.coords]
    e1 = [mpmath.mpf(0)] * 3
    e2 = [mpmath.mpf(0)] * 3
    e1[ia], e1[ib] = mpmath.mpf(1), mpmath.mpf(beta)
    e2[ia], e2[ib] = mpmath.mpf(alpha), mpmath.mpf(1)
    slope_poly = [_mp(c, theta) for c in record.tangent_slopes.coeffs]
    roots = mpmath.polyroots(list(reversed(slope_poly)), maxsteps=200, extraprec=2 * mpmath.mp.dps)
    a = sorted((-mpmath.mpc(r) for r in roots), key=_order)
    return LocalModel(record.multiplicity, a, theta, point, e1, e2, f_local, h_local, record)


def _separation(values) -> object:
    best = None
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            gap = abs(values[i] - values[j])
            best = gap if best is None or gap < best else best
    return best


@dataclass
class LambdaRoots:
    mu: object
    roots: list
    separation: object
    discriminant: object
    distinct: bool


def lambda_mu_roots(model: LocalModel, mu) -> LambdaRoots:
    """Roots of prod (lambda + a_i) - mu, sorted deterministically."""
    mu_n = _mp(mu, 0)
    coeffs = [mpmath.mpc(1)]
    for a in model.slopes:
        coeffs = [x + y for x, y in zip(coeffs + [0], [0] + [c * a for c in coeffs])]
    coeffs[-1] -= mu_n
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=2 * mpmath.mp.dps)
    roots = sorted((mpmath.mpc(r) for r in roots), key=_order)
    disc = mpmath.mpf(1)
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            disc *= (roots[i] - roots[j]) ** 2
    sep = _separation(roots) if len(roots) > 1 else mpmath.inf
    tol = mpmath.mpf(10) ** (-(mpmath.mp.dps // 3))
    distinct = abs(mu_n) > tol and sep > tol
    return LambdaRoots(mu, roots, sep, disc, bool(distinct))


@dataclass
class ContactEstimate:
    k: int
    pair: tuple[int, int]
    mu: object
    epsilons: list
    distances: list
    slope: float
    residual: float
    target: Fraction
    relative_error: float
    precision: int

    def passed(self, tolerance: float = 0.02) -> bool:
        return self.relative_error <= tolerance


def _fit(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    icpt = my - slope * mx
    res = mpmath.sqrt(sum((y - (slope * x + icpt)) ** 2 for x, y in zip(xs, ys)) / n)
    return slope, res


def _w_polynomial(model: LocalModel, s, x) -> list:
    """Coefficients (high to low) of w -> f_local(s, w) + x h_local(s, w)."""
    deg = max(model.f_local.degree_in("w"), model.h_local.degree_in("w"))
    coeffs = [mpmath.mpc(0)] * (deg + 1)
    for poly, scale in ((model.f_local, 1), (model.h_local, x)):
        for (i, j), c in poly.terms.items():
            coeffs[j] += scale * _mp(c, model.theta) * s ** i
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return list(reversed(coeffs))


def default_eps_grid(lo: float = 1e-5, hi: float = 1e-2, n: int = 7) -> list:
    lo_m, hi_m = mpmath.log10(mpmath.mpf(lo)), mpmath.log10(mpmath.mpf(hi))
    return [mpmath.mpf(10) ** (hi_m + (lo_m - hi_m) * i / (n - 1)) for i in range(n)]


def outer_contact_slope(
    inp: SisInput,
    record: SingularPointRecord,
    pair: tuple[int, int] = (0, 1),
    mu=None,
    epsilons: Sequence | None = None,
    conjugate: int = 0,
    radius: str = "nominal",
    digits: int | None = None,
) -> ContactEstimate:
    """Fit log(distance) against log(radius) for two lifted test-curve branches.

    The test curve is x = mu_c s^k, y = mu_c s^(k+1) in the blow-up chart of
    the singular point; the branches are w = lambda_j s + ..., found by
    solving f_d + x f_{d+1} = 0 for w at each radius.

    ``radius="nominal"`` measures the sphere radius as |x| |P|, the norm of
    the cone point under the lifted pair; ``"true"`` uses the norm of the
    lifted point itself. They differ by a factor 1 + O(s), so both give the
    same exponent in the limit, but the nominal one has a smaller bias on a
    finite grid.
    """
    if radius not in ("nominal", "true"):
        raise ValueError("radius must be 'nominal' or 'true'")
    j, l = pair
    k = record.multiplicity
    if j == l:
        raise ValueError("the two branches of a pair must differ")
    if not (0 <= j < k and 0 <= l < k):
        raise ValueError(f"branch indices must lie in 0..{k - 1}")
    dps = precision(digits)
    with mpmath.workdps(dps):
        model = local_model(inp, record, conjugate)
        mus = [mu] if mu is not None else list(MU_SEQUENCE)
        lam = None
        for candidate in mus:
            lam = lambda_mu_roots(model, candidate)
            if lam.distinct:
                mu = candidate
                break
        if lam is None or not lam.distinct:
            raise NonGenericMu(f"mu={mus[-1]} gives colliding lambda roots")
        c0 = _mp(model.f_local.coefficient((0, k)), model.theta)
        h0 = _mp(model.h_local.constant_term(), model.theta)
        if h0 == 0:
            raise NumericError("f_{d+1} vanishes at the point: not superisolated")
        mu_c = -_mp(mu, 0) * c0 / h0
        norm_p = mpmath.sqrt(sum(abs(c) ** 2 for c in model.point))
        norm_e2 = mpmath.sqrt(sum(abs(c) ** 2 for c in model.e2))
        eps = [mpmath.mpf(e) for e in (epsilons if epsilons is not None else default_eps_grid())]
        if len(eps) < 2 or any(e <= 0 for e in eps):
            raise ValueError("need at least two positive radii")
        floor = mpmath.mpf(10) ** (-(dps - 10))
        logs_e, logs_d, dists = [], [], []
        for e in sorted(eps, reverse=True):
            s = (e / (abs(mu_c) * norm_p)) ** (mpmath.mpf(1) / k)
            x = mu_c * s ** k
            coeffs = _w_polynomial(model, s, x)
            try:
                roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=3 * dps)
            except mpmath.libmp.NoConvergence:
                raise PrecisionAdvisory(f"root finding did not converge at eps={mpmath.nstr(e, 5)}") from None
            picked = []
            for idx in (j, l):
                target = lam.roots[idx] * s
                ranked = sorted(roots, key=lambda r: abs(r - target))
                near, runner = ranked[0], ranked[1] if len(ranked) > 1 else None
                gap = min(abs(lam.roots[idx] - lam.roots[o]) for o in range(k) if o != idx) * s
                if abs(near - target) > gap / 3 or (runner is not None and abs(runner - target) < gap / 3):
                    raise BranchSwapError(f"branch {idx} is ambiguous at eps={mpmath.nstr(e, 5)}")
                picked.append(near)
            dist = abs(x) * abs(picked[0] - picked[1]) * norm_e2
            if dist <= 0 or dist / e < floor:
                raise PrecisionAdvisory(
                    f"eps={mpmath.nstr(e, 5)} is below what {dps}-digit arithmetic resolves"
                )
            if radius == "nominal":
                rad = abs(x) * norm_p
            else:
                rad = abs(x) * mpmath.sqrt(sum(abs(pc + s * a + picked[0] * b) ** 2
                                               for pc, a, b in zip(model.point, model.e1, model.e2)))
            logs_e.append(mpmath.log(rad))
            logs_d.append(mpmath.log(dist))
            dists.append(dist)
        slope, res = _fit(logs_e, logs_d)
        target = Fraction(k + 1, k)
        rel = abs(slope - mpmath.mpf(target.numerator) / target.denominator) / (
            mpmath.mpf(target.numerator) / target.denominator)
        return ContactEstimate(
            k, (j, l), mu,
            [float(e) for e in sorted(eps, reverse=True)],
            [float(dd) for dd in dists],
            float(slope), float(res), target, float(rel), dps,
        )
