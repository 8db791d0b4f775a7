"""JSON instance/report formats and SVG drawing.

Coordinates travel as ``"p/q"`` strings so nothing is lost to binary
floats.  SVG output is presentation only and rounds freely.
"""
from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

import jsonschema

from .geometry import Point
from .representation import (
    ClusterObstacle,
    Embedding,
    FaceObstacle,
    Graph,
    ObstacleRepresentation,
    PointObstacle,
    PolygonObstacle,
)

_RATIONAL = {"type": ["string", "integer"], "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}
_POINT = {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 2}

INSTANCE_SCHEMA = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {
            "type": "array", "items": {"type": "integer", "minimum": 1},
            "minItems": 2, "maxItems": 2}},
        "points": {"type": "array", "items": _POINT},
        "obstacles": {"type": "array", "items": {"oneOf": [
            {"type": "object", "required": ["type", "at"],
             "properties": {"type": {"const": "point"}, "at": _POINT}},
            {"type": "object", "required": ["type", "vertices"],
             "properties": {"type": {"const": "polygon"},
                            "vertices": {"type": "array", "items": _POINT, "minItems": 3}}},
            {"type": "object", "required": ["type", "id"],
             "properties": {"type": {"const": "face"}, "id": {"type": "integer", "minimum": 0}}},
            {"type": "object", "required": ["type", "faces"],
             "properties": {"type": {"const": "cluster"},
                            "faces": {"type": "array", "items": {"type": "integer", "minimum": 0},
                                      "minItems": 1}}},
        ]}},
    },
}


class SchemaError(ValueError):
    pass


def fmt(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s.replace(" ", ""))


def point_json(p: Point) -> list:
    return [fmt(p.x), fmt(p.y)]


def parse_point(v) -> Point:
    return Point(parse_rational(v[0]), parse_rational(v[1]))


class Instance:
    """A parsed instance file: graph, optional embedding and raw obstacles."""

    def __init__(self, graph: Graph, embedding: Embedding | None = None, obstacles=None):
        self.graph = graph
        self.embedding = embedding
        self.raw_obstacles = obstacles or []

    def obstacles(self, arrangement_factory=None) -> tuple:
        """Materialise obstacles; face ids need the planarized drawing."""
        out, arr = [], None
        for ob in self.raw_obstacles:
            kind = ob["type"]
            if kind == "point":
                out.append(PointObstacle(parse_point(ob["at"])))
            elif kind == "polygon":
                out.append(PolygonObstacle(tuple(parse_point(v) for v in ob["vertices"])))
            else:
                if arr is None:
                    from .arrangement import planarize
                    arr = (arrangement_factory or planarize)(self.graph, self.embedding)
                ids = [ob["id"]] if kind == "face" else ob["faces"]
                for f in ids:
                    if f >= len(arr.faces):
                        raise SchemaError(f"face id {f} out of range (0..{len(arr.faces) - 1})")
                if kind == "face":
                    out.append(FaceObstacle(ob["id"], arr))
                else:
                    out.append(ClusterObstacle(tuple(ob["faces"]), arr))
        return tuple(out)

    def representation(self) -> ObstacleRepresentation:
        if self.embedding is None:
            raise SchemaError("instance has no points")
        return ObstacleRepresentation(self.graph, self.embedding, self.obstacles())


def parse_instance(doc: dict) -> Instance:
    try:
        jsonschema.validate(doc, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from None
    n = doc["n"]
    try:
        graph = Graph(n, frozenset(tuple(e) for e in doc["edges"]))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None
    emb = None
    if "points" in doc:
        if len(doc["points"]) != n:
            raise SchemaError(f"expected {n} points, got {len(doc['points'])}")
        try:
            emb = Embedding(tuple(parse_point(p) for p in doc["points"]))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(str(exc)) from None
    return Instance(graph, emb, doc.get("obstacles"))


def load_instance(path) -> Instance:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: {exc}") from None
    return parse_instance(doc)


def obstacle_json(ob) -> dict:
    if isinstance(ob, PointObstacle):
        return {"type": "point", "at": point_json(ob.at)}
    if isinstance(ob, PolygonObstacle):
        return {"type": "polygon", "vertices": [point_json(v) for v in ob.vertices]}
    if isinstance(ob, FaceObstacle):
        return {"type": "face", "id": ob.face_id}
    return {"type": "cluster", "faces": list(ob.face_ids)}


def instance_json(graph: Graph, emb: Embedding | None = None, obstacles=None) -> dict:
    doc = {"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()]}
    if emb is not None:
        doc["points"] = [point_json(p) for p in emb.points]
    if obstacles is not None:
        doc["obstacles"] = [obstacle_json(o) for o in obstacles]
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_atomic(path, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


# --- SVG ---

def render_svg(graph: Graph, emb: Embedding, obstacles=(), arrangement=None,
               size: int = 400, margin: int = 20) -> str:
    pts = list(emb.points)
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    s = (size - 2 * margin) / span

    def tx(p):
        return (round(margin + (float(p.x) - x0) * s, 3),
                round(size - margin - (float(p.y) - y0) * s, 3))

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    chosen = set()
    for ob in obstacles:
        chosen.update(getattr(ob, "face_ids", ()))
    if arrangement is not None and 0 in chosen:
        # tint everything, then blank out the bounded faces that are not obstacles
        parts.append(f'<rect x="0" y="0" width="{size}" height="{size}" '
                     'fill="#f4d03f" fill-opacity="0.35"/>')
        for f in range(1, len(arrangement.faces)):
            if f not in chosen:
                coords = " ".join("%s,%s" % tx(p) for p in arrangement.face_polygon(f))
                parts.append(f'<polygon points="{coords}" fill="white"/>')
    for ob in obstacles:
        face_ids = getattr(ob, "face_ids", None)
        if face_ids is not None:
            if arrangement is None:
                continue
            for f in face_ids:
                if f == 0:
                    continue
                coords = " ".join("%s,%s" % tx(p) for p in arrangement.face_polygon(f))
                parts.append(f'<polygon points="{coords}" fill="#f4d03f" fill-opacity="0.6"/>')
        elif isinstance(ob, PolygonObstacle):
            coords = " ".join("%s,%s" % tx(p) for p in ob.vertices)
            parts.append(f'<polygon points="{coords}" fill="#aaaaaa" fill-opacity="0.6"/>')
        elif isinstance(ob, PointObstacle):
            cx, cy = tx(ob.at)
            parts.append(f'<circle cx="{cx}" cy="{cy}" r="3" fill="#c0392b"/>')
    for u, w in graph.sorted_edges():
        (ax, ay), (bx, by) = tx(emb(u)), tx(emb(w))
        parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-width="1.5"/>')
    for u, w in graph.non_edges():
        (ax, ay), (bx, by) = tx(emb(u)), tx(emb(w))
        parts.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#e67e22" '
                     'stroke-width="0.8" stroke-dasharray="4 3"/>')
    for i, p in enumerate(pts, start=1):
        cx, cy = tx(p)
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="#2e86c1"/>')
        parts.append(f'<text x="{cx + 5}" y="{cy - 5}" font-size="10">{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
