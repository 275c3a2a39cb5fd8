"""Exact analysis of a projective plane curve {f = 0} in P^2.

Singular points are found by resultant elimination in an affine chart after a
deterministic linear change of coordinates, and are returned grouped by the
number field Q[t]/(m) that carries their coordinates: one record stands for
``deg m`` conjugate geometric points. Every computation over such a field may
discover that m factors (a zero divisor shows up); the affected record is then
split and recomputed on each factor.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .algebra import MPoly, NFElement, NumberField, SplitEvent, UPoly, decide_zero, rational_roots
from .algebra.resultant import bareiss_det, resultant
from .algebra.scalars import inverse

VARS = ("x", "y", "z")
LOCAL = ("u", "v")

MAX_SHEARS = 80


class CurveError(ValueError):
    pass


class NotSquarefreeError(CurveError):
    pass


class ShearExhaustedError(CurveError):
    pass


class PointNotOnCurveError(CurveError):
    pass


class ComponentError(CurveError):
    pass


# ---------------------------------------------------------------------------
# deterministic coordinate changes


def _det(t: int, s: int) -> int:
    return 1 + t**3 + s**3 - 3 * t * s


def shear_sequence(limit: int = MAX_SHEARS) -> Iterator[tuple[int, int]]:
    """(0,0), (1,2), (2,1), (1,3), (2,2), (3,1), ... by t+s then t; singular ones skipped."""
    yield (0, 0)
    count = 1
    for total in itertools.count(2):
        for t in range(1, total):
            if count >= limit:
                return
            if _det(t, total - t) == 0:
                continue
            yield (t, total - t)
            count += 1


def transform_images(t: int, s: int) -> dict[str, MPoly]:
    """Old coordinates as linear forms in new ones (circulant matrix (1, t, s)).

    x -> x + t y + s z, y -> s x + y + t z, z -> t x + s y + z. A shear fixing
    z would keep the line z = 0 pointwise, so all three rows mix.
    """
    X, Y, Z = (MPoly.var(VARS, v) for v in VARS)
    return {"x": X + Y * t + Z * s, "y": X * s + Y + Z * t, "z": X * t + Y * s + Z}


def apply_transform(f: MPoly, t: int, s: int) -> MPoly:
    return f.substitute(transform_images(t, s), VARS)


def _old_coordinates(t: int, s: int, x, y, z):
    return (x + y * t + z * s, x * s + y + z * t, x * t + y * s + z)


# ---------------------------------------------------------------------------
# conversions


def _nested(f: MPoly) -> UPoly:
    """f(x, y, 1) as a polynomial in y whose coefficients are polynomials in x."""
    buckets: dict[int, dict[int, Fraction]] = {}
    for (a, b, _c), coef in f.terms.items():
        inner = buckets.setdefault(b, {})
        inner[a] = inner.get(a, Fraction(0)) + coef
    n = max(buckets, default=-1)
    coeffs = []
    for j in range(n + 1):
        inner = buckets.get(j, {})
        m = max(inner, default=-1)
        coeffs.append(UPoly([inner.get(i, Fraction(0)) for i in range(m + 1)], "x"))
    return UPoly(coeffs, "y")


def _binary_at_infinity(f: MPoly) -> UPoly:
    """f(x, 1, 0) as a univariate polynomial in x."""
    coeffs: dict[int, Fraction] = {}
    for (a, _b, c), coef in f.terms.items():
        if c == 0:
            coeffs[a] = coeffs.get(a, Fraction(0)) + coef
    n = max(coeffs, default=-1)
    return UPoly([coeffs.get(i, Fraction(0)) for i in range(n + 1)], "x")


def _specialize(nested: UPoly, theta: NFElement) -> UPoly:
    K = theta.field
    return UPoly([K(c(theta)) for c in nested.coeffs], "y")


def _require_homogeneous(f: MPoly, what: str = "polynomial") -> int:
    if tuple(f.variables) != VARS:
        raise CurveError(f"{what} must be in variables x, y, z")
    if f.is_zero():
        raise CurveError(f"{what} is zero")
    if not f.is_homogeneous():
        raise CurveError(f"{what} is not homogeneous")
    return f.degree


def _first_good_transform(polys: Sequence[MPoly]) -> tuple[int, int]:
    """First transform putting [0:1:0] off every curve in ``polys``."""
    for t, s in shear_sequence():
        if all(p.evaluate(_old_coordinates(t, s, Fraction(0), Fraction(1), Fraction(0))) != 0
               for p in polys):
            return t, s
    raise ShearExhaustedError("no coordinate change moves [0:1:0] off the curve")


def is_squarefree_homogeneous(f: MPoly) -> bool:
    """True iff the homogeneous form f has no repeated factor.

    After a transform that makes f(x, y, 1) monic in y up to a constant (so
    no factor is lost at z = 0), f is squarefree iff Res_y(f, f_y) is not
    identically zero in x.
    """
    d = _require_homogeneous(f)
    if d <= 1:
        return True
    t, s = _first_good_transform([f])
    g = apply_transform(f, t, s)
    fa = _nested(g)
    fy = _nested(g.diff("y"))
    return not resultant(fa, fy).is_zero()


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class ProjectivePoint:
    """A Galois-stable set of ``field.degree`` points with coordinates in ``field``.

    Coordinates are normalized so that the last nonzero one is exactly 1.
    """

    field: NumberField
    coords: tuple

    @property
    def degree(self) -> int:
        return self.field.degree

    @property
    def modulus(self) -> UPoly:
        return self.field.modulus

    @property
    def chart(self) -> int:
        for i in (2, 1, 0):
            if not self.coords[i].is_zero():
                return i
        raise CurveError("all coordinates zero")

    def restrict(self, modulus: UPoly) -> "ProjectivePoint":
        sub = NumberField(modulus, self.field.name, check=False)
        return ProjectivePoint(sub, tuple(c.restrict(sub) for c in self.coords))

    def sort_key(self):
        return (
            self.degree,
            tuple(self.modulus.coeffs),
            tuple(tuple(c.rep.coeffs) for c in self.coords),
        )

    def describe(self) -> list[str]:
        return [str(c.rep) for c in self.coords]

    def is_rational(self) -> bool:
        return self.degree == 1

    def canonical(self) -> "ProjectivePoint":
        """Re-express the field with a coordinate (or a small combination) as generator."""
        n = self.degree
        name = self.field.name
        if n == 1:
            root = -self.modulus[0]
            K = NumberField.rational(name)
            return ProjectivePoint(K, tuple(K(c.rep(root)) for c in self.coords))
        base = [c for c in self.coords if not c.is_rational()]
        candidates = list(base)
        for a, b in itertools.combinations(base, 2):
            candidates.extend(a + b * j for j in (1, 2, 3))
        for c in candidates:
            chi = _charpoly(c)
            if not chi.is_squarefree():
                continue
            L = NumberField(chi, name, check=False)
            image_of_gen = _express_generator(c)
            if image_of_gen is None:
                continue
            gen_L = UPoly(image_of_gen, name)

            def phi(e: NFElement) -> NFElement:
                return L(UPoly(e.rep.coeffs, name).compose(gen_L))

            return ProjectivePoint(L, tuple(phi(e) for e in self.coords))
        return self


def _charpoly(c: NFElement) -> UPoly:
    """Characteristic polynomial of multiplication by c, via Res_t(m(t), T - c(t))."""
    K = c.field
    m_coeffs = [UPoly([a], "T") for a in K.modulus.coeffs]
    g_coeffs = [UPoly([-a], "T") for a in c.rep.coeffs] or [UPoly([], "T")]
    g_coeffs[0] = g_coeffs[0] + UPoly([Fraction(0), Fraction(1)], "T")
    chi = resultant(UPoly(m_coeffs, "t"), UPoly(g_coeffs, "t"))
    return chi.monic()


def _express_generator(c: NFElement) -> list[Fraction] | None:
    """Coefficients beta with sum beta_j c^j = t, or None if c is not primitive."""
    K = c.field
    n = K.degree
    cols = []
    power = K.one
    for _ in range(n):
        cols.append([power.rep[i] for i in range(n)])
        power = power * c
    # solve sum_j beta_j cols[j] = e_1 (the generator t)
    target = [Fraction(1) if i == 1 else Fraction(0) for i in range(n)]
    rows = [[cols[j][i] for j in range(n)] + [target[i]] for i in range(n)]
    return _solve(rows, n)


def _solve(rows: list[list[Fraction]], n: int) -> list[Fraction] | None:
    a = [list(r) for r in rows]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


class _ShearRejected(Exception):
    pass


def run_branches(modulus: UPoly, name: str, compute: Callable[[NumberField], object]):
    """Evaluate ``compute`` over Q[name]/(modulus), splitting on zero divisors."""
    out = []
    stack = [modulus.monic()]
    while stack:
        m = stack.pop()
        K = NumberField(m, name, check=False)
        try:
            out.append((K, compute(K)))
        except SplitEvent as ev:
            if ev.modulus.coeffs != K.modulus.coeffs:
                raise
            stack.append(ev.second)
            stack.append(ev.first)
    return out


def _points_for_transform(f: MPoly, t: int, s: int) -> list[ProjectivePoint] | None:
    g = apply_transform(f, t, s)
    d = g.degree
    if g.coefficient((0, d, 0)) == 0:
        return None
    gx, gy, gz = g.diff("x"), g.diff("y"), g.diff("z")
    # singular points on the line z = 0 of the new coordinates
    inf = [_binary_at_infinity(p) for p in (gx, gy, gz)]
    h = UPoly([], "x")
    for p in inf:
        h = h.gcd(p) if not h.is_zero() else p
    if h.is_zero() or h.degree > 0:
        return None
    if all(p.evaluate((Fraction(1), Fraction(0), Fraction(0))) == 0 for p in (gx, gy, gz)):
        return None

    fa, fx, fy = _nested(g), _nested(gx), _nested(gy)
    res = [resultant(fa, q) for q in (fx, fy) if not q.is_zero()]
    common = res[0]
    for r in res[1:]:
        common = common.gcd(r) if not common.is_zero() else r
    if common.is_zero():
        raise NotSquarefreeError("curve has a non-reduced component")
    if common.degree <= 0:
        return []
    xpoly = common.squarefree_part()

    def compute(K: NumberField):
        theta = K.gen
        polys = [_specialize(q, theta) for q in (fa, fx, fy)]
        G = UPoly([], "y")
        for p in polys:
            G = G.gcd(p) if not G.is_zero() else p.monic()
        if G.degree <= 0:
            return None
        G = G.squarefree_part()
        if G.degree >= 2:
            raise _ShearRejected()
        y0 = -G[0]
        for p in polys:
            if not p(y0).is_zero():
                raise CurveError("internal: singular point failed re-evaluation")
        old = _old_coordinates(t, s, theta, y0, K.one)
        return ProjectivePoint(K, _normalize(old))

    # rational x-coordinates are peeled off first so they are handled over Q
    moduli = []
    rest = xpoly
    for root in rational_roots(xpoly):
        lin = UPoly([-root, Fraction(1)], xpoly.var)
        moduli.append(lin)
        rest = rest // lin
    if rest.degree > 0:
        moduli.append(rest)
    branches = []
    try:
        for m in moduli:
            branches.extend(run_branches(m, "t", compute))
    except _ShearRejected:
        return None
    return [pt for _K, pt in branches if pt is not None]


def _normalize(coords) -> tuple:
    """Scale so the last nonzero coordinate is 1; zero-tests every coordinate."""
    zero = [decide_zero(c) for c in coords]
    for i in (2, 1, 0):
        if not zero[i]:
            inv = coords[i].inverse()
            out = tuple(c * inv for c in coords)
            # the scaled coordinates are zero-tested too, so records are uniform
            for c in out:
                decide_zero(c)
            return out
    raise CurveError("internal: zero projective point")


def find_singular_locus(f: MPoly, shear_start: int = 0) -> tuple[list[ProjectivePoint], tuple[int, int]]:
    """Singular points of {f = 0} and the coordinate change that found them.

    ``shear_start`` skips that many transforms of the fixed sequence; the
    result must not depend on it.
    """
    if shear_start < 0:
        raise ValueError("shear_start must be nonnegative")
    d = _require_homogeneous(f)
    if d < 2:
        return [], (0, 0)
    if not is_squarefree_homogeneous(f):
        raise NotSquarefreeError(f"{f} has a repeated factor; the curve is not reduced")
    tried = []
    for t, s in itertools.islice(shear_sequence(), shear_start, None):
        tried.append((t, s))
        pts = _points_for_transform(f, t, s)
        if pts is None:
            continue
        pts = [p.canonical() for p in pts]
        pts.sort(key=ProjectivePoint.sort_key)
        for p in pts:
            _verify_singular(f, p)
        return pts, (t, s)
    raise ShearExhaustedError(f"no admissible coordinate change among {len(tried)} tried for {f}")


def _verify_singular(f: MPoly, p: ProjectivePoint) -> None:
    for q in (f, f.diff("x"), f.diff("y"), f.diff("z")):
        if not q.evaluate(p.coords).is_zero():
            raise CurveError(f"internal: returned point {p.describe()} is not singular")


# ---------------------------------------------------------------------------
# local analysis


def local_expansion(f: MPoly, point: ProjectivePoint) -> MPoly:
    """f dehomogenized at the point's chart, translated to the point, in (u, v)."""
    c = point.chart
    others = [i for i in range(3) if i != c]
    K = point.field
    images = {VARS[c]: MPoly.constant(LOCAL, K.one)}
    for name, idx in zip(LOCAL, others):
        images[VARS[idx]] = MPoly.var(LOCAL, name) + point.coords[idx]
    return f.substitute(images, LOCAL).map_coeffs(K)


def _form_nonzero(coeffs) -> bool:
    pending = None
    for c in coeffs:
        if not isinstance(c, NFElement):
            if c != 0:
                return True
            continue
        if c.is_zero():
            continue
        try:
            c.inverse()
            return True
        except SplitEvent as ev:
            pending = pending or ev
    if pending is not None:
        raise pending
    return False


def multiplicity_and_initial_form(f: MPoly, point: ProjectivePoint) -> tuple[int, MPoly]:
    """Order k of f at the point and its degree-k initial form in local (u, v)."""
    local = local_expansion(f, point)
    for deg, comp in local.homogeneous_components().items():
        if _form_nonzero(comp.coefficients()):
            if deg == 0:
                raise PointNotOnCurveError(f"point {point.describe()} is not on the curve")
            return deg, comp
    raise CurveError("zero polynomial has no multiplicity")


def multiplicity_at(f: MPoly, point: ProjectivePoint) -> int:
    """Order of vanishing of f at the point (0 if f does not vanish there)."""
    local = local_expansion(f, point)
    for deg, comp in local.homogeneous_components().items():
        if _form_nonzero(comp.coefficients()):
            return deg
    raise CurveError("zero polynomial has no multiplicity")


def _binary_coeffs(form: MPoly) -> list:
    """Coefficients c_j of u^j v^(k-j), j = 0..k."""
    k = form.degree
    zero = next(iter(form.terms.values())) * 0
    return [form.terms.get((j, k - j), zero) for j in range(k + 1)]


def is_ordinary(initial_form: MPoly) -> bool:
    """The initial form is squarefree as a binary form (k distinct tangent lines)."""
    k = initial_form.degree
    if k < 1:
        return False
    cs = _binary_coeffs(initial_form)
    e = 0
    while decide_zero(cs[e]):
        e += 1
    if e >= 2:
        return False
    # G(1, v) with u^e stripped; degree k - e since c_e is a unit
    g = UPoly([cs[j] for j in range(k, e - 1, -1)], "v")
    return g.is_squarefree()


def local_shear_sequence() -> Iterator[tuple[int, int]]:
    yield (0, 0)
    for total in itertools.count(1):
        for a in range(0, total + 1):
            b = total - a
            if a * b != 1:
                yield (a, b)


def sheared_form(form: MPoly, alpha: int, beta: int) -> MPoly:
    """F(v + alpha*w, w + beta*v) written in the local names (u, v) -> (v, w)."""
    V = MPoly.var(LOCAL, "u")
    W = MPoly.var(LOCAL, "v")
    return form.substitute({"u": V + W * alpha, "v": W + V * beta}, LOCAL)


def tangent_slopes(initial_form: MPoly, limit: int = 200) -> tuple[UPoly, tuple[int, int]]:
    """Monic prod (T + a_i) with all a_i nonzero, after a local shear.

    In sheared local coordinates (v, w) the form is c * prod (w + a_i v); the
    shear is the first one for which no tangent is v = 0 or w = 0.
    """
    k = initial_form.degree
    for count, (alpha, beta) in enumerate(local_shear_sequence()):
        if count >= limit:
            break
        F = sheared_form(initial_form, alpha, beta)
        cs = _binary_coeffs(F)  # cs[j] multiplies v^j w^(k-j)
        if decide_zero(cs[0]) or decide_zero(cs[k]):
            continue
        lead = cs[0] if isinstance(cs[0], NFElement) else Fraction(cs[0])
        # F(1, T) = sum_j cs[j] T^(k-j)
        slopes = UPoly([cs[k - i] for i in range(k + 1)], "T").scale(inverse(lead))
        return slopes, (alpha, beta)
    raise ShearExhaustedError("no local shear normalizes the tangent lines")


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class SingularPointRecord:
    point: ProjectivePoint
    multiplicity: int
    initial_form: MPoly
    ordinary: bool | None = None
    tangent_slopes: UPoly | None = None
    local_shear: tuple[int, int] | None = None

    @property
    def degree(self) -> int:
        return self.point.degree

    @property
    def field(self) -> NumberField:
        return self.point.field

    def sort_key(self):
        return self.point.sort_key()


def analyze_point(f: MPoly, point: ProjectivePoint, classify: bool = True) -> SingularPointRecord:
    k, form = multiplicity_and_initial_form(f, point)
    rec = SingularPointRecord(point, k, form)
    if not classify:
        return rec
    ordinary = is_ordinary(form)
    if not ordinary:
        return replace(rec, ordinary=False)
    slopes, shear = tangent_slopes(form)
    return replace(rec, ordinary=True, tangent_slopes=slopes, local_shear=shear)


def refine(f: MPoly, records: Sequence[SingularPointRecord], fn: Callable, classify: bool = True):
    """Apply ``fn(record)`` to each record, splitting records on zero divisors.

    Returns a sorted list of (record, result). Split pieces get a canonical
    generator and are re-analyzed from scratch before ``fn`` is retried.
    """
    out = []
    stack = list(reversed(records))
    while stack:
        rec = stack.pop()
        try:
            out.append((rec, fn(rec)))
        except SplitEvent as ev:
            if ev.modulus.coeffs != rec.point.modulus.coeffs:
                raise
            for m in (ev.second, ev.first):
                piece = rec.point.restrict(m).canonical()
                stack.extend(_analyze_all(f, [piece], classify))
    out.sort(key=lambda pair: pair[0].sort_key())
    return out


def _analyze_all(f: MPoly, points: Sequence[ProjectivePoint], classify: bool) -> list[SingularPointRecord]:
    out: list[SingularPointRecord] = []
    stack = list(reversed(points))
    while stack:
        pt = stack.pop()
        try:
            out.append(analyze_point(f, pt, classify))
        except SplitEvent as ev:
            if ev.modulus.coeffs != pt.modulus.coeffs:
                raise
            stack.append(pt.restrict(ev.second).canonical())
            stack.append(pt.restrict(ev.first).canonical())
    return out


def singular_points(f: MPoly, shear_start: int = 0) -> list[SingularPointRecord]:
    """Singular points of {f = 0} with multiplicity and initial form."""
    points, _ = find_singular_locus(f, shear_start)
    recs = _analyze_all(f, points, classify=False)
    return sorted(recs, key=SingularPointRecord.sort_key)


def analyze_curve(f: MPoly, shear_start: int = 0) -> list[SingularPointRecord]:
    """Singular points with ordinariness and tangent-slope data filled in."""
    points, _ = find_singular_locus(f, shear_start)
    recs = _analyze_all(f, points, classify=True)
    return sorted(recs, key=SingularPointRecord.sort_key)


def geometric_count(records: Sequence[SingularPointRecord]) -> int:
    return sum(r.degree for r in records)


# ---------------------------------------------------------------------------
# components


@dataclass(frozen=True)
class ComponentData:
    factors: tuple[MPoly, ...]
    degrees: tuple[int, ...]
    records: tuple[SingularPointRecord, ...]
    branch_counts: tuple[tuple[int, ...], ...]  # [record][factor]
    labels: tuple[str, ...] = field(default=())
    cone_of: tuple[int | None, ...] = field(default=())

    def expanded(self):
        """Geometric components: cones over a rational point become separate lines.

        Yields (label, degree, column of branch counts per record).
        """
        out = []
        for j, g in enumerate(self.factors):
            col = [row[j] for row in self.branch_counts]
            vertex = self.cone_of[j] if self.cone_of else None
            label = self.labels[j] if self.labels else str(g)
            if vertex is None:
                out.append((label, self.degrees[j], col))
                continue
            d = self.degrees[j]
            line_col = [1 if i == vertex else 0 for i in range(len(col))]
            for n in range(d):
                out.append((f"{label} [line {n + 1}/{d}]", 1, line_col))
        return out


def _coprime(g1: MPoly, g2: MPoly) -> bool:
    t, s = _first_good_transform([g1, g2])
    a = _nested(apply_transform(g1, t, s))
    b = _nested(apply_transform(g2, t, s))
    if a.degree == 0 or b.degree == 0:
        # constant in y after the transform means degree 0 overall; cannot happen
        return True
    return not resultant(a, b).is_zero()


def validate_components(
    f: MPoly,
    factors: Sequence[MPoly],
    records: Sequence[SingularPointRecord] | None = None,
    labels: Sequence[str] | None = None,
) -> ComponentData:
    """Check a claimed factorization of f and count branches per singular point."""
    _require_homogeneous(f)
    if not factors:
        raise ComponentError("no factors given")
    degrees = []
    for g in factors:
        try:
            degrees.append(_require_homogeneous(g, "factor"))
        except CurveError as exc:
            raise ComponentError(str(exc)) from None
        if degrees[-1] < 1:
            raise ComponentError("constant factor")
    prod = MPoly.constant(VARS, 1)
    for g in factors:
        prod = prod * g
    exp, coef = f.sorted_terms()[0]
    pc = prod.coefficient(exp)
    if pc == 0 or prod * (coef / pc) != f:
        raise ComponentError("product of factors does not equal f_d up to a scalar")
    for i, j in itertools.combinations(range(len(factors)), 2):
        if not _coprime(factors[i], factors[j]):
            raise ComponentError(f"factors {i} and {j} share a common factor")
    for i, g in enumerate(factors):
        if not is_squarefree_homogeneous(g):
            raise ComponentError(f"factor {i} is not squarefree")
    if records is None:
        records = analyze_curve(f)

    pairs = refine(f, records, lambda rec: tuple(multiplicity_at(g, rec.point) for g in factors))
    recs = tuple(r for r, _ in pairs)
    counts = tuple(b for _, b in pairs)
    for rec, row in zip(recs, counts):
        if sum(row) != rec.multiplicity:
            raise ComponentError(
                f"branch counts {row} at {rec.point.describe()} do not sum to k={rec.multiplicity}"
            )
    cone_of: list[int | None] = []
    for j, d in enumerate(degrees):
        col = [row[j] for row in counts]
        vertex = None
        if d >= 2:
            hits = [i for i, b in enumerate(col) if b == d]
            if hits:
                vertex = hits[0]
                if recs[vertex].degree != 1 or any(b for i, b in enumerate(col) if i != vertex):
                    raise ComponentError(
                        f"factor {j} is a union of lines through one point that also passes "
                        "through other singular points; supply it split into lines"
                    )
            else:
                genus2 = (d - 1) * (d - 2) - sum(
                    recs[i].degree * b * (b - 1) for i, b in enumerate(col)
                )
                if genus2 < 0:
                    raise ComponentError(f"factor {j} is not absolutely irreducible")
        cone_of.append(vertex)
    return ComponentData(
        factors=tuple(factors),
        degrees=tuple(degrees),
        records=recs,
        branch_counts=counts,
        labels=tuple(labels) if labels else tuple(str(g) for g in factors),
        cone_of=tuple(cone_of),
    )


def bezout_defect(records: Sequence[SingularPointRecord], d: int) -> int:
    """d(d-1) - sum over geometric points of k(k-1)."""
    return d * (d - 1) - sum(r.degree * r.multiplicity * (r.multiplicity - 1) for r in records)


__all__ = [
    "ComponentData",
    "ComponentError",
    "CurveError",
    "NotSquarefreeError",
    "PointNotOnCurveError",
    "ProjectivePoint",
    "ShearExhaustedError",
    "SingularPointRecord",
    "analyze_curve",
    "analyze_point",
    "bareiss_det",
    "bezout_defect",
    "find_singular_locus",
    "geometric_count",
    "is_ordinary",
    "is_squarefree_homogeneous",
    "local_expansion",
    "multiplicity_and_initial_form",
    "multiplicity_at",
    "refine",
    "shear_sequence",
    "singular_points",
    "tangent_slopes",
    "validate_components",
]
