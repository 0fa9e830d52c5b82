"""Graph documents: an exact, canonical, diff-able file format.

A document is UTF-8 JSON with exactly two top-level lists:

    {
      "vertices": [ {"id": "a", "sigma": "1/2"}, ... ],
      "edges":    [ {"u": "a", "v": "b", "mu": "0.35"}, ... ]
    }

Values are text, either a fraction "p/q" or a decimal literal; both parse
exactly. Serialization is canonical: vertices sorted by id, edges sorted by
their sorted endpoint pair, every value rendered as a lowest-terms fraction
(integers as "p/1", never decimals). parse(serialize(g)) == g, and
serialize(parse(doc)) canonicalizes doc.
"""

import json
from pathlib import Path

from .errors import DocumentSyntaxError, DuplicateEdgeError, DuplicateVertexError
from .graph import FuzzyGraph, assemble, build, pair_key
from .values import as_value, value_text

_VERTEX_KEYS = {"id", "sigma"}
_EDGE_KEYS = {"u", "v", "mu"}


def _entry(obj, keys: set[str], where: str) -> dict:
    if not isinstance(obj, dict) or set(obj) != keys:
        raise DocumentSyntaxError(
            f"{where} must be an object with exactly the keys {sorted(keys)}"
        )
    for key, value in obj.items():
        if not isinstance(value, str):
            raise DocumentSyntaxError(f"{where}: field {key!r} must be a string")
    return obj


def parse_graph(text: str) -> FuzzyGraph:
    """Parse a document and validate it with the full build rules.

    Vertex ids containing '~' are accepted here (and only here) so that
    serialized product graphs round-trip.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise DocumentSyntaxError(
            "document must be an object with exactly the keys ['edges', 'vertices']"
        )
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise DocumentSyntaxError("'vertices' and 'edges' must be lists")

    vertices = []
    for k, row in enumerate(doc["vertices"]):
        entry = _entry(row, _VERTEX_KEYS, f"vertices[{k}]")
        vid = entry["id"]
        if not vid:
            raise DocumentSyntaxError(f"vertices[{k}]: empty id")
        if _bad_product_id(vid):
            raise DocumentSyntaxError(f"vertices[{k}]: malformed product id {vid!r}")
        try:
            sigma = as_value(entry["sigma"])
        except ValueError as exc:
            raise DocumentSyntaxError(f"vertices[{k}] (id {vid!r}): {exc}") from exc
        vertices.append((vid, sigma))

    edges = []
    for k, row in enumerate(doc["edges"]):
        entry = _entry(row, _EDGE_KEYS, f"edges[{k}]")
        try:
            mu = as_value(entry["mu"])
        except ValueError as exc:
            raise DocumentSyntaxError(
                f"edges[{k}] ({entry['u']!r}, {entry['v']!r}): {exc}"
            ) from exc
        edges.append((entry["u"], entry["v"], mu))

    if any("~" in vid for vid, _ in vertices):
        return _build_relaxed(vertices, edges)
    return build(vertices, edges)


def _bad_product_id(vid: str) -> bool:
    return "~" in vid and any(not part for part in vid.split("~"))


def _build_relaxed(vertices, edges) -> FuzzyGraph:
    # Same checks as build() minus the reserved-character rule; duplicates
    # are still rejected with the ids named in the message.
    sigma = {}
    for vid, value in vertices:
        if vid in sigma:
            raise DuplicateVertexError(f"vertex {vid!r} listed twice")
        sigma[vid] = value
    mu = {}
    for u, v, value in edges:
        key = pair_key(u, v)
        if key in mu:
            raise DuplicateEdgeError(f"edge {key!r} listed twice")
        mu[key] = value
    return assemble(sigma, mu)


def serialize_graph(g: FuzzyGraph) -> str:
    """Canonical document text for g; byte-stable across runs."""

    def block(rows: list[str]) -> str:
        if not rows:
            return "[]"
        return "[\n" + ",\n".join(rows) + "\n  ]"

    vertex_rows = [
        f'    {{"id": {json.dumps(vid)}, "sigma": "{value_text(g.sigma[vid])}"}}'
        for vid in sorted(g.sigma)
    ]
    edge_rows = [
        f'    {{"u": {json.dumps(u)}, "v": {json.dumps(v)}, "mu": "{value_text(g.mu[(u, v)])}"}}'
        for u, v in sorted(g.mu)
    ]
    return (
        "{\n"
        f'  "vertices": {block(vertex_rows)},\n'
        f'  "edges": {block(edge_rows)}\n'
        "}\n"
    )


def load_graph(path) -> FuzzyGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def save_graph(path, g: FuzzyGraph) -> None:
    Path(path).write_text(serialize_graph(g), encoding="utf-8")
