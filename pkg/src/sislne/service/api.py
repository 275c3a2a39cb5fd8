"""Transport-independent handlers; the HTTP app and the CLI both call these."""
from __future__ import annotations

from fractions import Fraction

from .. import graphs, numeric
from ..algebra import ParseError, decide_zero
from ..cluster import cusp_cluster, inner_rate
from ..core import InputError, SisInput, SisReport, decide_lne
from ..curves import ComponentError, CurveError, SingularPointRecord
from .schemas import (
    CheckResponse,
    Claim2Request,
    Claim2Response,
    ContactRequest,
    ContactResponse,
    GraphsRequest,
    GraphsResponse,
    InputDocument,
    PointOut,
)

# exit codes double as the error taxonomy of the HTTP layer
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_NOT_SIS = 3
EXIT_NOT_LNE = 4
EXIT_NO_FACTORS = 5
EXIT_ADVISORY = 6

HTTP_STATUS = {EXIT_INPUT: 422, EXIT_NOT_SIS: 409, EXIT_NOT_LNE: 409, EXIT_NO_FACTORS: 422,
               EXIT_ADVISORY: 422, EXIT_FAIL: 500}


class ServiceError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_input(doc: InputDocument) -> SisInput:
    try:
        if isinstance(doc.fd, str):
            return SisInput.from_strings(doc.fd, doc.fd1)
        return SisInput.from_factors(doc.fd.factors, doc.fd1)
    except (ParseError, InputError, CurveError) as exc:
        raise ServiceError(str(exc), EXIT_INPUT) from None


def analyze(doc: InputDocument) -> SisReport:
    inp = load_input(doc)
    try:
        return decide_lne(inp, doc.options.shearSeedOverride or 0)
    except (ComponentError, CurveError, InputError) as exc:
        raise ServiceError(str(exc), EXIT_INPUT) from None


def _point_out(rec: SingularPointRecord, flag: bool) -> PointOut:
    return PointOut(
        coords=rec.point.describe(),
        modulus=str(rec.point.modulus),
        degree=rec.degree,
        k=rec.multiplicity,
        ordinary=rec.ordinary,
        fd1NonZero=flag,
    )


def check_response(report: SisReport) -> CheckResponse:
    inp = report.input
    points = []
    witness = None
    for rec in report.records:
        # records are already refined, so this zero test cannot split
        flag = not decide_zero(inp.f_d1.evaluate(rec.point.coords))
        out = _point_out(rec, flag)
        points.append(out)
        if report.witness is not None and rec is report.witness:
            witness = out
    return CheckResponse(
        d=report.d,
        superisolated=report.superisolated,
        lne=report.lne,
        r=report.r,
        points=points,
        case=report.case_tag,
        N0=report.n0,
        kList=report.k_list(),
        witness=witness,
    )


def run_check(doc: InputDocument) -> CheckResponse:
    return check_response(analyze(doc))


def run_graphs(req: GraphsRequest) -> GraphsResponse:
    report = analyze(req.document)
    if not report.superisolated:
        raise ServiceError("input is not superisolated; the graphs are not defined", EXIT_NOT_LNE)
    if not report.lne:
        raise ServiceError("tangent cone has a non-ordinary singular point; the graphs are "
                           "only defined in the ordinary case", EXIT_NOT_LNE)
    if req.which == "T":
        g = graphs.build_T(report)
    else:
        if report.components is None:
            raise ServiceError("G0 needs f_d given as a list of factors", EXIT_NO_FACTORS)
        g = graphs.build_G0(report)
    content = graphs.emit_json(g) if req.format == "json" else graphs.emit_dot(g, req.which)
    return GraphsResponse(which=req.which, format=req.format, content=content)


def run_claim2(req: Claim2Request) -> Claim2Response:
    res = numeric.claim2_experiment(req.k, req.trials, req.seed)
    return Claim2Response(
        k=res.k,
        trials=res.trials,
        seed=res.seed,
        eta=None if res.eta is None else str(res.eta),
        coincidentZero=res.coincident_zero,
        symbolicDegree=res.symbolic_degree,
        passed=res.passed,
        problems=res.problems,
    )


def parse_mu(text: str | None):
    if text is None:
        return None
    try:
        return Fraction(text)
    except ValueError:
        pass
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise ServiceError(f"cannot read mu={text!r}; use a rational like 1/2 or 1+0.5i", EXIT_INPUT) from None


def run_contact(req: ContactRequest) -> ContactResponse:
    report = analyze(req.document)
    if not report.lne:
        raise ServiceError("contact exponents need an LNE input (ordinary singular points)", EXIT_NOT_LNE)
    pts = numeric.geometric_points(report)
    if req.point >= len(pts):
        raise ServiceError(f"point index {req.point} out of range 0..{len(pts) - 1}", EXIT_INPUT)
    rec, conj = pts[req.point]
    eps = None
    if req.epsGrid is not None:
        g = req.epsGrid
        eps = numeric.default_eps_grid(g.lo, g.hi, g.n)
    try:
        est = numeric.outer_contact_slope(
            report.input, rec, tuple(req.pair), parse_mu(req.mu), eps, conj,
            radius=req.radius, digits=req.document.options.precision,
        )
    except ValueError as exc:
        raise ServiceError(str(exc), EXIT_INPUT) from None
    except numeric.NumericError as exc:
        raise ServiceError(f"precision advisory: {exc}", EXIT_ADVISORY) from None
    c, delta, _ = cusp_cluster(rec.multiplicity)
    q_inn = inner_rate(c, delta)
    mu = est.mu
    return ContactResponse(
        k=est.k,
        pair=est.pair,
        mu=str(mu) if not isinstance(mu, complex) else f"{mu.real}+{mu.imag}i",
        epsilons=est.epsilons,
        distances=est.distances,
        slope=est.slope,
        residual=est.residual,
        target=str(est.target),
        relativeError=est.relative_error,
        precision=est.precision,
        innerRate=str(q_inn),
        passed=est.passed() and q_inn == est.target,
    )
