"""Decorated trees T_i, the bouquet T and the surface graph G0.

T is driven through :mod:`sislne.cluster`, so its weights, multiplicities and
inner rates come from blow-up bookkeeping and are re-checked against the
intersection matrix. G0 is assembled from the singular points and the
user-supplied components of the tangent-cone curve.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from . import cluster as cl
from .core import CASE1, NotApplicableError, SisReport
from .curves import ComponentData

SCHEMA_VERSION = "1"

ROOT = "root"
DELTA = "deltaNode"
SEPARATION = "separationNode"
STRING = "stringVertex"
LNODE = "LNode"
PNODE = "PNode"
KINDS = (ROOT, DELTA, SEPARATION, STRING, LNODE, PNODE)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: int
    kind: str
    weight: int
    m: int
    q: Fraction | None = None
    genus: int | None = None
    arrows: int = 0
    in_tprime: bool = False
    label: str = ""
    derived: tuple[str, ...] = ()
    degree: int | None = None


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int, int], ...]  # (a, b, multiplicity) with a < b
    meta: dict = field(default_factory=dict, compare=True, hash=False)

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def by_kind(self, kind: str) -> list[Vertex]:
        return [v for v in self.vertices if v.kind == kind]

    def neighbours(self, vid: int) -> list[tuple[int, int]]:
        out = []
        for a, b, mult in self.edges:
            if a == vid:
                out.append((b, mult))
            elif b == vid:
                out.append((a, mult))
        return sorted(out)

    def valency(self, vid: int, with_arrows: bool = True) -> int:
        val = sum(mult for _, mult in self.neighbours(vid))
        return val + (self.vertex(vid).arrows if with_arrows else 0)

    def is_tree(self) -> bool:
        n = len(self.vertices)
        if n == 0:
            return True
        if any(mult != 1 for _, _, mult in self.edges) or len(self.edges) != n - 1:
            return False
        return self.is_connected()

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0].id}
        stack = [self.vertices[0].id]
        while stack:
            v = stack.pop()
            for u, _ in self.neighbours(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(self.vertices)


def _canonical(vertices: Iterable[Vertex], edges: Iterable[tuple[int, int, int]], meta: dict) -> DualGraph:
    vs = tuple(sorted(vertices, key=lambda v: v.id))
    es = tuple(sorted((min(a, b), max(a, b), m) for a, b, m in edges))
    return DualGraph(vs, es, meta)


# -- T -------------------------------------------------------------------

def _tree_from_cluster(c: cl.Cluster, arrows: dict[int, int], kinds: dict[int, str],
                       tprime: set[int], meta: dict) -> DualGraph:
    m, q = cl.bookkeeping(c)
    m2, q2 = cl.matrix_oracle(c)
    if [Fraction(x) for x in m] != m2 or q != q2:
        raise GraphError("internal: bookkeeping and intersection-matrix decorations disagree")
    vertices = []
    for v in c.divisors():
        kind = kinds.get(v, STRING)
        derived = ("q",) if kind == SEPARATION else ()
        vertices.append(Vertex(v, kind, c.euler_weight(v), m[v], q[v], None,
                                arrows.get(v, 0), v in tprime, "", derived))
    edges = [(*sorted(tuple(e)), 1) for e in c.edges]
    return _canonical(vertices, edges, meta)


def build_Ti(k: int) -> DualGraph:
    """Resolution tree of one polar base point of multiplicity k."""
    if not isinstance(k, int) or k < 2:
        raise GraphError("T_i needs k >= 2")
    c, delta, _ = cl.cusp_cluster(k)
    meta = {"case": None, "r": 1, "kList": [k], "N0": None}
    return _tree_from_cluster(c, {delta: k - 1}, {0: ROOT, delta: DELTA}, {0, delta}, meta)


def _short_case(tag: str | None) -> str | None:
    if tag is None:
        return None
    return "Case1" if tag == CASE1 else "Case2"


def build_T(report: SisReport) -> DualGraph:
    """Bouquet of the T_i along a shared root, with the Case 2 satellite step."""
    if not report.lne:
        raise NotApplicableError("T is only defined when every singular point is ordinary")
    ks = report.k_list()
    n0 = report.n0
    c = cl.Cluster()
    kinds = {0: ROOT}
    arrows: dict[int, int] = {}
    deltas = []
    for k in ks:
        c, delta, _ = cl.cusp_cluster(k, c)
        kinds[delta] = DELTA
        arrows[delta] = k - 1
        deltas.append(delta)
    tprime = {0, *deltas}
    if n0:
        arrows[0] = n0
        if ks:
            kinds[0] = DELTA
        for delta in deltas:
            c = c.blow_up_satellite(0, delta, "separation")
            sep = c.size - 1
            kinds[sep] = SEPARATION
            tprime.add(sep)
    meta = {"case": _short_case(report.case_tag), "r": report.r, "kList": ks, "N0": n0,
            "d": report.d}
    return _tree_from_cluster(c, arrows, kinds, tprime, meta)


def root_vertex(g: DualGraph) -> Vertex:
    return g.vertex(0)


def strings_off_tprime(g: DualGraph) -> bool:
    """Complement of T' is a union of bamboos: valency <= 2, no arrows."""
    outside = {v.id for v in g.vertices if not v.in_tprime}
    for vid in outside:
        if g.vertex(vid).arrows:
            return False
        inner = [u for u, _ in g.neighbours(vid) if u in outside]
        if len(inner) > 2 or g.valency(vid) > 2:
            return False
    return True


# -- G0 ------------------------------------------------------------------

def build_G0(report: SisReport, components: ComponentData | None = None) -> DualGraph:
    if not report.lne:
        raise NotApplicableError("G0 is only defined when every singular point is ordinary")
    components = components if components is not None else report.components
    if components is None:
        raise GraphError("G0 needs the components of the tangent-cone curve")
    d = report.d
    records = components.records
    # one P-node per geometric point; conjugate points share their data
    points = []
    for i, rec in enumerate(records):
        for c in range(rec.degree):
            desc = rec.point.describe()
            tag = f"[{':'.join(desc)}]" + (f" #{c + 1}/{rec.degree} over {rec.point.modulus}" if rec.degree > 1 else "")
            points.append((i, rec.multiplicity, tag))
    comps = components.expanded()
    vertices = []
    edges = []
    n_l = len(comps)
    for j, (label, dj, col) in enumerate(comps):
        incident = [(pid, col[i], k) for pid, (i, k, _) in enumerate(points) if col[i]]
        weight = -dj - sum(k * b for _, b, k in incident)
        genus = (dj - 1) * (dj - 2) // 2 - sum(b * (b - 1) // 2 for _, b, _ in incident)
        arrows = dj * (d - 1) - sum(b * (k - 1) for _, b, k in incident)
        if genus < 0 or arrows < 0:
            raise GraphError(f"internal: component {label} has inconsistent branch data")
        vertices.append(Vertex(j, LNODE, weight, 1, None, genus, arrows, True, label,
                               ("weight", "genus", "arrows"), dj))
        for pid, b, _ in incident:
            edges.append((j, n_l + pid, b))
    for pid, (_, k, tag) in enumerate(points):
        vertices.append(Vertex(n_l + pid, PNODE, -1, k, None, None, k - 1, True, tag))
    meta = {"case": _short_case(report.case_tag), "r": report.r, "kList": report.k_list(),
            "N0": report.n0, "d": d}
    return _canonical(vertices, edges, meta)


def check_H_relation(g: DualGraph) -> bool:
    """(H).E = 0 at every vertex of G0.

    The strict transform of a generic hyperplane section meets the L-node of
    a degree-d_j component in d_j points and misses every P-node.
    """
    for v in g.vertices:
        total = v.m * v.weight
        for u, mult in g.neighbours(v.id):
            total += g.vertex(u).m * mult
        if v.kind == LNODE:
            total += v.degree
        if total != 0:
            return False
    return True


# -- serialization ---------------------------------------------------------

def _q_text(q: Fraction | None) -> str | None:
    return None if q is None else str(q)


def to_dict(g: DualGraph) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "vertices": [
            {
                "id": v.id,
                "kind": v.kind,
                "weight": v.weight,
                "m": v.m,
                "q": _q_text(v.q),
                "genus": v.genus,
                "arrows": v.arrows,
                "inTPrime": v.in_tprime,
                "label": v.label,
                "derived": list(v.derived),
                "degree": v.degree,
            }
            for v in g.vertices
        ],
        "edges": [{"a": a, "b": b, "mult": m} for a, b, m in g.edges],
        "meta": dict(g.meta),
    }


def emit_json(g: DualGraph) -> str:
    return json.dumps(to_dict(g), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def from_dict(data: dict) -> DualGraph:
    vertices = [
        Vertex(
            id=int(v["id"]),
            kind=v["kind"],
            weight=int(v["weight"]),
            m=int(v["m"]),
            q=None if v.get("q") is None else Fraction(v["q"]),
            genus=v.get("genus"),
            arrows=int(v.get("arrows", 0)),
            in_tprime=bool(v.get("inTPrime", False)),
            label=v.get("label", ""),
            derived=tuple(v.get("derived", ())),
            degree=v.get("degree"),
        )
        for v in data["vertices"]
    ]
    edges = [(int(e["a"]), int(e["b"]), int(e["mult"])) for e in data["edges"]]
    return _canonical(vertices, edges, dict(data.get("meta", {})))


def parse_json(text: str) -> DualGraph:
    return from_dict(json.loads(text))


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(g: DualGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices:
        parts = [f"w={v.weight}", f"m={v.m}"]
        if v.q is not None:
            parts.append(f"q={v.q}")
        if v.genus:
            parts.append(f"g={v.genus}")
        text = ", ".join(parts)
        if v.label:
            text = f"{v.label}\\n{text}"
        shape = "doublecircle" if v.kind in (ROOT, LNODE) or (v.id == 0 and v.kind == DELTA) else "circle"
        lines.append(f'  v{v.id} [shape={shape}, label="{_dot_escape(text)}"];')
    for a, b, mult in g.edges:
        for _ in range(mult):
            lines.append(f"  v{a} -- v{b};")
    for v in g.vertices:
        for n in range(v.arrows):
            lines.append(f'  a{v.id}_{n} [shape=point, label=""];')
            lines.append(f"  v{v.id} -- a{v.id}_{n} [dir=forward, arrowhead=normal];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def with_meta(g: DualGraph, **extra) -> DualGraph:
    meta = dict(g.meta)
    meta.update(extra)
    return replace(g, meta=meta)
