"""JSON documents for graphs and relations, and DOT export.

A graph document lists the vertices once and refers to them by index in
the edge list.  Only non-loop edges are written; the self-loop on every
vertex is implied.

    {"schemaVersion": "1", "dom": ["a"], "cod": ["b", "c"],
     "vertices": [["a", "b"], ["a", "c"]], "edges": [[0, 1]]}

Product labels are nested JSON arrays.
"""
from __future__ import annotations

import json

from .errors import CPRelError
from .graphcat import Graph
from .relcore import FiniteSet, Relation, format_label

SCHEMA_VERSION = "1"


class DocumentError(CPRelError, ValueError):
    pass


def label_to_json(x):
    if isinstance(x, tuple):
        return [label_to_json(y) for y in x]
    return x


def label_from_json(v):
    if isinstance(v, list):
        return tuple(label_from_json(y) for y in v)
    if isinstance(v, str):
        return v
    raise DocumentError(f"labels must be strings or arrays, got {v!r}")


def _set_from_json(values, name) -> FiniteSet:
    if not isinstance(values, list):
        raise DocumentError(f"{name} must be an array of labels")
    try:
        return FiniteSet(name, tuple(label_from_json(v) for v in values))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _pair_from_json(v):
    if not isinstance(v, list) or len(v) != 2:
        raise DocumentError(f"expected a [dom, cod] pair, got {v!r}")
    return (label_from_json(v[0]), label_from_json(v[1]))


def _check_header(doc, keys):
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("schemaVersion") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schemaVersion {doc.get('schemaVersion')!r}")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise DocumentError(f"missing fields: {', '.join(missing)}")


def graph_to_document(g: Graph) -> dict:
    vertices = g.sorted_vertices()
    index = {v: i for i, v in enumerate(vertices)}
    edges = sorted((index[u], index[w]) for u, w in g.arcs if index[u] < index[w])
    return {
        "schemaVersion": SCHEMA_VERSION,
        "dom": [label_to_json(x) for x in g.dom],
        "cod": [label_to_json(x) for x in g.cod],
        "vertices": [[label_to_json(a), label_to_json(b)] for a, b in vertices],
        "edges": [list(e) for e in edges],
    }


def graph_from_document(doc) -> Graph:
    _check_header(doc, ("dom", "cod", "vertices", "edges"))
    dom = _set_from_json(doc["dom"], "A")
    cod = _set_from_json(doc["cod"], "B")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise DocumentError("vertices and edges must be arrays")
    vertices = [_pair_from_json(v) for v in doc["vertices"]]
    if len(set(vertices)) != len(vertices):
        raise DocumentError("duplicate vertex")
    edges = []
    for e in doc["edges"]:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(i, int) and not isinstance(i, bool) and 0 <= i < len(vertices) for i in e)
        ):
            raise DocumentError(f"edge {e!r} must be two vertex indices")
        if e[0] == e[1]:
            raise DocumentError("self-loops are implied and must not be listed")
        edges.append((vertices[e[0]], vertices[e[1]]))
    try:
        return Graph(dom, cod, vertices, edges)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def relation_to_document(r: Relation) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "dom": [label_to_json(x) for x in r.dom],
        "cod": [label_to_json(x) for x in r.cod],
        "pairs": [[label_to_json(a), label_to_json(b)] for a, b in r.sorted_pairs],
    }


def relation_from_document(doc) -> Relation:
    _check_header(doc, ("dom", "cod", "pairs"))
    dom = _set_from_json(doc["dom"], "A")
    cod = _set_from_json(doc["cod"], "B")
    if not isinstance(doc["pairs"], list):
        raise DocumentError("pairs must be an array")
    try:
        return Relation(dom, cod, frozenset(_pair_from_json(p) for p in doc["pairs"]))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=False)


def loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def vertex_name(v) -> str:
    return f"{format_label(v[0])}|{format_label(v[1])}"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{"]
    for v in g.sorted_vertices():
        lines.append(f"  {_quote(vertex_name(v))};")
    for u, w in g.non_loop_edges():
        lines.append(f"  {_quote(vertex_name(u))} -- {_quote(vertex_name(w))};")
    lines.append("}")
    return "\n".join(lines) + "\n"

