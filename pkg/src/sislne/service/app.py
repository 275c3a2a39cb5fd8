"""FastAPI application: POST endpoints mirroring the CLI subcommands."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import api
from .schemas import (
    CheckResponse,
    Claim2Request,
    Claim2Response,
    ContactRequest,
    ContactResponse,
    GraphsRequest,
    GraphsResponse,
    InputDocument,
)

app = FastAPI(title="sislne", version=__version__)


@app.exception_handler(api.ServiceError)
async def _service_error(_request: Request, exc: api.ServiceError):
    status = api.HTTP_STATUS.get(exc.code, 400)
    return JSONResponse(status_code=status, content={"error": str(exc), "code": exc.code})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


# plain ``def`` handlers run in the threadpool, so long exact computations
# do not block the event loop
@app.post("/check", response_model=CheckResponse)
def check(doc: InputDocument) -> CheckResponse:
    return api.run_check(doc)


@app.post("/graphs", response_model=GraphsResponse)
def graphs(req: GraphsRequest) -> GraphsResponse:
    return api.run_graphs(req)


@app.post("/claim2", response_model=Claim2Response)
def claim2(req: Claim2Request) -> Claim2Response:
    return api.run_claim2(req)


@app.post("/contact", response_model=ContactResponse)
def contact(req: ContactRequest) -> ContactResponse:
    return api.run_contact(req)
