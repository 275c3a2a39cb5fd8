"""Request and response models shared by the HTTP service and the CLI."""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "1"


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class FactorsSpec(_Strict):
    factors: list[str] = Field(min_length=1)


class Options(_Strict):
    shearSeedOverride: Optional[int] = Field(default=None, ge=0)
    precision: Optional[int] = Field(default=None, ge=15)
    emit: Optional[list[Literal["verdict", "T", "G0", "all"]]] = None


class InputDocument(_Strict):
    """f_d (an expression or its factors) and f_{d+1}, both over Q."""

    fd: Union[str, FactorsSpec]
    fd1: str
    options: Options = Field(default_factory=Options)


class PointOut(BaseModel):
    coords: list[str]
    modulus: str
    degree: int
    k: int
    ordinary: Optional[bool]
    fd1NonZero: bool


class CheckResponse(BaseModel):
    schemaVersion: str = SCHEMA_VERSION
    d: int
    superisolated: bool
    lne: Optional[bool]
    r: int
    points: list[PointOut]
    case: Optional[str]
    N0: Optional[int]
    kList: list[int]
    witness: Optional[PointOut] = None


class GraphsRequest(_Strict):
    document: InputDocument
    which: Literal["T", "G0"] = "T"
    format: Literal["json", "dot"] = "json"


class GraphsResponse(BaseModel):
    which: str
    format: str
    content: str


class Claim2Request(_Strict):
    k: int = Field(ge=2, le=12)
    trials: int = Field(default=20, ge=1, le=1000)
    seed: int = 0


class Claim2Response(BaseModel):
    k: int
    trials: int
    seed: int
    eta: Optional[str]
    coincidentZero: bool
    symbolicDegree: Optional[int]
    passed: bool
    problems: list[str]


class EpsGrid(_Strict):
    lo: float = Field(gt=0)
    hi: float = Field(gt=0)
    n: int = Field(default=7, ge=2, le=200)


class ContactRequest(_Strict):
    document: InputDocument
    point: int = Field(default=0, ge=0)
    pair: tuple[int, int] = (0, 1)
    mu: Optional[str] = None
    epsGrid: Optional[EpsGrid] = None
    radius: Literal["nominal", "true"] = "nominal"


class ContactResponse(BaseModel):
    k: int
    pair: tuple[int, int]
    mu: str
    epsilons: list[float]
    distances: list[float]
    slope: float
    residual: float
    target: str
    relativeError: float
    precision: int
    innerRate: str
    passed: bool


class ErrorResponse(BaseModel):
    error: str
    code: int


class GraphVertex(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int
    kind: Literal["root", "deltaNode", "separationNode", "stringVertex", "LNode", "PNode"]
    weight: int
    m: int
    q: Optional[str]
    genus: Optional[int]
    arrows: int
    inTPrime: bool
    label: str
    derived: list[str]
    degree: Optional[int]


class GraphEdge(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: int
    b: int
    mult: int = Field(ge=1)


class GraphMeta(BaseModel):
    case: Optional[Literal["Case1", "Case2"]]
    r: int
    kList: list[int]
    N0: Optional[int]
    d: Optional[int] = None


class GraphDocument(BaseModel):
    """Shape of the JSON emitted for T and G0."""

    model_config = ConfigDict(extra="forbid")

    schemaVersion: str
    vertices: list[GraphVertex]
    edges: list[GraphEdge]
    meta: GraphMeta


SCHEMA_MODELS = {
    "input-document": InputDocument,
    "check-response": CheckResponse,
    "graph": GraphDocument,
    "claim2-response": Claim2Response,
    "contact-response": ContactResponse,
}


def json_schemas() -> dict[str, dict]:
    return {name: model.model_json_schema() for name, model in SCHEMA_MODELS.items()}


def write_schemas(directory) -> list:
    """Regenerate the shipped schema files; returns the written paths."""
    import json
    from pathlib import Path

    out = []
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, schema in json_schemas().items():
        path = directory / f"{name}.schema.json"
        path.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        out.append(path)
    return out
