"""JSON instance and result files.

Instance file::

    {"params": {"a": 2, "p": 2, "lambda": 0, "mu": 1, "r": 1},
     "k": 2,
     "edges": [{"from": "p1.v1", "to": "p2.v1", "color": 1}, ...]}

Vertices are implicit (``p<i>.v<j>``, 1-based).  Canonical output sorts
each edge's endpoints, then the edge list by (from, to, color), numerically.
"""

from __future__ import annotations

import json
import re

from .errors import InstanceError, ParameterError
from .family import GddParams, conforms_to_gdd, vertices_of
from .multigraph import ColoredMultigraph, VertexId

_NAME = re.compile(r"p(\d+)\.v(\d+)")


def vertex_name(v: VertexId) -> str:
    return f"p{v.part}.v{v.slot}"


def _vkey(v):
    return (v.part, v.slot)


def _parse_vertex(name, a, parts):
    m = _NAME.fullmatch(name) if isinstance(name, str) else None
    if not m:
        raise InstanceError(f"bad vertex name {name!r}", "unknown-vertex")
    part, slot = int(m.group(1)), int(m.group(2))
    if not (1 <= part <= parts and 1 <= slot <= a):
        raise InstanceError(f"vertex {name} outside the declared parts", "unknown-vertex")
    return VertexId(part, slot)


def _params_from(obj) -> GddParams:
    if not isinstance(obj, dict):
        raise InstanceError("missing 'params' object")
    try:
        return GddParams(obj["a"], obj["p"], obj["lambda"], obj["mu"], obj.get("r"))
    except KeyError as exc:
        raise InstanceError(f"params lack {exc.args[0]!r}") from None


def _load(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InstanceError("top level must be an object")
    return doc


def _edges_from(doc, a, parts, k):
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise InstanceError("'edges' must be a list")
    out = []
    for rec in edges:
        if not isinstance(rec, dict) or set(rec) != {"from", "to", "color"}:
            raise InstanceError(f"bad edge record {rec!r}")
        c = rec["color"]
        if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= k:
            raise InstanceError(f"color {c!r} outside 1..{k}", "color-range")
        u = _parse_vertex(rec["from"], a, parts)
        v = _parse_vertex(rec["to"], a, parts)
        out.append((u, v, c))
    return out


def parse_instance(text: str):
    """Return ``(params, graph)``; the graph must be a coloring of K(a^(p); lambda, mu)."""
    doc = _load(text)
    params = _params_from(doc.get("params"))
    if params.r is None:
        raise ParameterError("instance params must include r")
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InstanceError("'k' must be a positive integer")
    edges = _edges_from(doc, params.a, params.p, k)
    g = ColoredMultigraph(vertices_of(params.a, params.p), edges, k)
    if any(e.is_loop for e in g.edges) or not conforms_to_gdd(g, params):
        raise InstanceError("edge multiplicities do not match lambda/mu", "multiplicity")
    return params, g


def _edge_records(g):
    recs = []
    for e in g.edges:
        u, v = sorted((e.u, e.v), key=_vkey)
        recs.append((_vkey(u), _vkey(v), e.color, vertex_name(u), vertex_name(v)))
    recs.sort()
    return [{"from": fu, "to": fv, "color": c} for _, _, c, fu, fv in recs]


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def serialize_instance(params: GddParams, g: ColoredMultigraph) -> str:
    return _dump({"params": params.as_dict(), "k": g.num_colors, "edges": _edge_records(g)})


def serialize_result(report) -> str:
    verdict = report.verdict
    doc = {"verdict": verdict.embeddable, "violated": list(verdict.violated)}
    if verdict.embeddable == "no":
        return _dump(doc)
    doc["regime"] = verdict.regime.tag.value
    if verdict.unmet:
        doc["unmet"] = list(verdict.unmet)
    if report.result is not None:
        g = report.result
        doc["params"] = report.params.as_dict()
        doc["k"] = g.num_colors
        doc["edges"] = _edge_records(g)
        doc["cycles"] = {str(j): [vertex_name(v) for v in _canonical_cycle(g.color_class(j))]
                         for j in g.colors()}
    return _dump(doc)


def _canonical_cycle(cls: ColoredMultigraph) -> list:
    ordered = cls.replace_edges(cls.edges, vertices=sorted(cls.vertices, key=_vkey))
    cyc = ordered.cycle_order()
    if len(cyc) > 2 and _vkey(cyc[-1]) < _vkey(cyc[1]):
        cyc = cyc[:1] + cyc[1:][::-1]
    return cyc


def parse_result(text: str):
    """Return ``(verdict, params, graph or None)`` from a serialized result."""
    doc = _load(text)
    verdict = doc.get("verdict")
    if verdict not in ("yes", "no", "undetermined"):
        raise InstanceError("missing or unknown verdict")
    if "edges" not in doc:
        return verdict, None, None
    params = _params_from(doc.get("params"))
    k = doc.get("k")
    if not isinstance(k, int) or k < 1:
        raise InstanceError("'k' must be a positive integer")
    parts = params.total_parts
    g = ColoredMultigraph(vertices_of(params.a, parts),
                          _edges_from(doc, params.a, parts, k), k)
    return verdict, params, g
