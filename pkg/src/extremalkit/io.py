"""JSON formats for weightings, trees, drawings and results.

Rationals are written as ``"p/q"`` strings (plain integers may also be bare
JSON numbers on input).  Schemas are JSON Schema documents; every reader
validates against them before building objects.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .geometry import Drawing
from .graphs import Diam4Descriptor, Graph, GraphError, SpiderDescriptor, Tree
from .partition import IndexPartition
from .rationals import as_rational, format_rational
from .weighted import VertexWeighting

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
    ]
}

WEIGHTS_SCHEMA = {
    "type": "object",
    "properties": {"weights": {"type": "array", "items": _RATIONAL}},
    "required": ["weights"],
}

_EDGES = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
}

GRAPH_SCHEMA = {
    "type": "object",
    "properties": {"n": {"type": "integer", "minimum": 0}, "edges": _EDGES},
    "required": ["n", "edges"],
}

TREE_SCHEMA = {
    "oneOf": [
        GRAPH_SCHEMA,
        {
            "type": "object",
            "properties": {"spider": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 3}},
            "required": ["spider"],
        },
        {
            "type": "object",
            "properties": {"diam4": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2}},
            "required": ["diam4"],
        },
    ]
}

DRAWING_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": _EDGES,
        "positions": {
            "type": "array",
            "items": {
                "type": "array",
                "items": [{"type": "integer", "minimum": 0}, _RATIONAL, _RATIONAL],
                "minItems": 3,
                "maxItems": 3,
            },
        },
    },
    "required": ["n", "edges", "positions"],
}

PARTITION_SCHEMA = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}

SCHEMAS = {
    "weights": WEIGHTS_SCHEMA,
    "graph": GRAPH_SCHEMA,
    "tree": TREE_SCHEMA,
    "drawing": DRAWING_SCHEMA,
    "partition": PARTITION_SCHEMA,
}


class SchemaError(ValueError):
    def __init__(self, kind: str, message: str):
        super().__init__(f"invalid {kind} document: {message} (see extremalkit.io.SCHEMAS[{kind!r}])")
        self.kind = kind


def _validate(kind: str, doc) -> None:
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise SchemaError(kind, exc.message) from None


def load_json(source) -> object:
    """Parse a path, a JSON string, or pass through an already decoded object."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith(("{", "["))):
        return json.loads(Path(source).read_text())
    if isinstance(source, str):
        return json.loads(source)
    return source


def weights_from_json(doc) -> VertexWeighting:
    doc = load_json(doc)
    _validate("weights", doc)
    return VertexWeighting(tuple(as_rational(w) for w in doc["weights"]))


def weights_to_json(W: VertexWeighting) -> dict:
    return {"weights": [format_rational(w) for w in W.weights]}


def tree_from_json(doc):
    """Return a :class:`Tree`; descriptor shorthands build the canonical labelling."""
    doc = load_json(doc)
    _validate("tree", doc)
    try:
        if "spider" in doc:
            return SpiderDescriptor(tuple(doc["spider"])).tree()
        if "diam4" in doc:
            return Diam4Descriptor(tuple(doc["diam4"])).tree()
        return Tree.from_edges(doc["n"], [tuple(e) for e in doc["edges"]])
    except GraphError as exc:
        raise SchemaError("tree", str(exc)) from None


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list]}


def drawing_to_json(d: Drawing) -> dict:
    doc = graph_to_json(d.graph)
    doc["positions"] = [[v, format_rational(p.x), format_rational(p.y)] for v, p in enumerate(d.positions)]
    return doc


def drawing_from_json(doc) -> Drawing:
    doc = load_json(doc)
    _validate("drawing", doc)
    try:
        g = Graph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]])
        if len(g.edges) == g.n - 1 and g.n > 0:
            try:
                g = Tree.from_graph(g)
            except GraphError:
                pass
    except GraphError as exc:
        raise SchemaError("drawing", str(exc)) from None
    pos = [None] * g.n
    for v, x, y in doc["positions"]:
        if not 0 <= v < g.n or pos[v] is not None:
            raise SchemaError("drawing", f"bad or repeated vertex {v} in positions")
        pos[v] = (as_rational(x), as_rational(y))
    if any(p is None for p in pos):
        raise SchemaError("drawing", "every vertex needs a position")
    return Drawing(g, tuple(pos))


def partition_to_json(p: IndexPartition) -> list[list[int]]:
    return p.as_lists()


def dumps(doc) -> str:
    return json.dumps(doc, indent=2)
