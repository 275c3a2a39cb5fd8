"""Command-line front end.

By default every subcommand runs in-process through the same handlers the
HTTP service uses; with ``--url`` it becomes a thin client of a running
``sislne serve`` instance. JSON goes to stdout, a one-line human summary to
stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from pydantic import BaseModel, ValidationError

from .service import api
from .service.schemas import (
    CheckResponse,
    Claim2Request,
    Claim2Response,
    ContactRequest,
    ContactResponse,
    EpsGrid,
    GraphsRequest,
    GraphsResponse,
    InputDocument,
)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_document(path: str) -> InputDocument:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", api.EXIT_INPUT) from None
    try:
        return InputDocument.model_validate_json(text)
    except ValidationError as exc:
        raise CliError(f"invalid input document {path}:\n{exc}", api.EXIT_INPUT) from None


def _call(args, endpoint: str, request: BaseModel, local: Callable, response_type: type[BaseModel]):
    """Run a handler in-process, or POST the request when --url is given."""
    if not getattr(args, "url", None):
        try:
            return local(request)
        except api.ServiceError as exc:
            raise CliError(str(exc), exc.code) from None
    import httpx

    url = args.url.rstrip("/") + endpoint
    try:
        resp = httpx.post(url, json=request.model_dump(mode="json"), timeout=args.timeout)
    except httpx.HTTPError as exc:
        raise CliError(f"request to {url} failed: {exc}", api.EXIT_FAIL) from None
    body = resp.json()
    if resp.status_code != 200:
        code = body.get("code", api.EXIT_INPUT) if isinstance(body, dict) else api.EXIT_INPUT
        msg = body.get("error") if isinstance(body, dict) and "error" in body else json.dumps(body)
        raise CliError(str(msg), int(code))
    return response_type.model_validate(body)


def _dump(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"


def cmd_check(args) -> int:
    doc = _read_document(args.file)
    res: CheckResponse = _call(args, "/check", doc, api.run_check, CheckResponse)
    sys.stdout.write(_dump(res))
    verdict = {True: "yes", False: "no", None: "n/a"}[res.lne]
    print(f"superisolated={'yes' if res.superisolated else 'no'} lne={verdict} r={res.r} "
          f"case={res.case} N0={res.N0}", file=sys.stderr)
    if args.require_sis and not res.superisolated:
        return api.EXIT_NOT_SIS
    if args.expect is not None:
        return api.EXIT_OK if verdict == args.expect else api.EXIT_FAIL
    return api.EXIT_OK


def cmd_graphs(args) -> int:
    doc = _read_document(args.file)
    req = GraphsRequest(document=doc, which=args.which, format=args.format)
    res: GraphsResponse = _call(args, "/graphs", req, api.run_graphs, GraphsResponse)
    if args.output:
        Path(args.output).write_text(res.content, encoding="utf-8")
    else:
        sys.stdout.write(res.content)
    print(f"wrote {res.which} as {res.format}", file=sys.stderr)
    return api.EXIT_OK


def cmd_claim2(args) -> int:
    try:
        req = Claim2Request(k=args.k, trials=args.trials, seed=args.seed)
    except ValidationError as exc:
        raise CliError(str(exc), api.EXIT_INPUT) from None
    res: Claim2Response = _call(args, "/claim2", req, api.run_claim2, Claim2Response)
    sys.stdout.write(_dump(res))
    print(f"claim2 k={res.k} eta={res.eta} {'pass' if res.passed else 'FAIL'}", file=sys.stderr)
    return api.EXIT_OK if res.passed else api.EXIT_FAIL


def _pair(text: str) -> tuple[int, int]:
    try:
        j, l = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("pair must look like J,L") from None
    return j, l


def _grid(text: str) -> EpsGrid:
    try:
        lo, hi, n = text.split(",")
        return EpsGrid(lo=float(lo), hi=float(hi), n=int(n))
    except (ValueError, ValidationError):
        raise argparse.ArgumentTypeError("eps grid must look like lo,hi,n with 0 < lo, hi") from None


def cmd_contact(args) -> int:
    doc = _read_document(args.file)
    req = ContactRequest(document=doc, point=args.point, pair=args.pair, mu=args.mu,
                         epsGrid=args.eps_grid, radius=args.radius)
    res: ContactResponse = _call(args, "/contact", req, api.run_contact, ContactResponse)
    sys.stdout.write(_dump(res))
    print(f"contact k={res.k} slope={res.slope:.5f} target={res.target} "
          f"inner={res.innerRate} {'pass' if res.passed else 'FAIL'}", file=sys.stderr)
    return api.EXIT_OK if res.passed else api.EXIT_FAIL


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("sislne.service.app:app", host=args.host, port=args.port, log_level="info")
    return api.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sislne", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def remote(p):
        p.add_argument("--url", help="base URL of a running service (default: run in-process)")
        p.add_argument("--timeout", type=float, default=300.0)

    p = sub.add_parser("check", help="superisolatedness and LNE verdict")
    p.add_argument("file", help="input document (JSON), or - for stdin")
    p.add_argument("--expect", choices=["yes", "no"], help="exit 0 only if the verdict matches")
    p.add_argument("--require-sis", action="store_true", help="exit 3 if not superisolated")
    remote(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("graphs", help="emit T or G0")
    p.add_argument("file")
    p.add_argument("--which", choices=["T", "G0"], default="T")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output")
    remote(p)
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("claim2", help="resultant identity experiment")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    remote(p)
    p.set_defaults(func=cmd_claim2)

    p = sub.add_parser("contact", help="outer contact exponent of two lifted branches")
    p.add_argument("file")
    p.add_argument("--point", type=int, default=0, help="index among geometric singular points")
    p.add_argument("--pair", type=_pair, default=(0, 1))
    p.add_argument("--mu")
    p.add_argument("--eps-grid", type=_grid, dest="eps_grid")
    p.add_argument("--radius", choices=["nominal", "true"], default="nominal")
    remote(p)
    p.set_defaults(func=cmd_contact)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
