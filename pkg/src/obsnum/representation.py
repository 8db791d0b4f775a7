"""Graphs, embeddings, obstacles and verification of obstacle representations.

Obstacles are open sets.  A point obstacle blocks a pair only when it sits
strictly inside the open segment; a polygon or face blocks when the open
segment meets its interior, so grazing a boundary never blocks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .geometry import (
    Point,
    lerp,
    on_closed_segment,
    on_open_segment,
    orientation,
    point_in_polygon,
    segment_params,
    segments_intersect_closed,
    signed_area2,
)


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges stored as sorted pairs."""
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            u, w = e
            if u == w:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= w <= self.n):
                raise ValueError(f"edge {e} outside 1..{self.n}")
            norm.add((min(u, w), max(u, w)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    @classmethod
    def grid(cls, a: int, b: int) -> "Graph":
        """a x b grid graph; vertex (i, j) is numbered i*b + j + 1."""
        def vid(i, j):
            return i * b + j + 1
        edges = set()
        for i in range(a):
            for j in range(b):
                if i + 1 < a:
                    edges.add((vid(i, j), vid(i + 1, j)))
                if j + 1 < b:
                    edges.add((vid(i, j), vid(i, j + 1)))
        return cls(a * b, frozenset(edges))

    def pairs(self):
        return itertools.combinations(range(1, self.n + 1), 2)

    def has_edge(self, u: int, w: int) -> bool:
        return (min(u, w), max(u, w)) in self.edges

    def non_edges(self) -> list[tuple[int, int]]:
        return [p for p in self.pairs() if p not in self.edges]

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled so that ``vertices[i]`` becomes i + 1."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        return Graph(len(vertices), frozenset(
            (index[u], index[w]) for u, w in self.edges if u in index and w in index))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Embedding:
    """Injective placement; ``points[i - 1]`` is the image of vertex i."""
    points: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point) else Point(Fraction(p[0]), Fraction(p[1]))
                    for p in self.points)
        object.__setattr__(self, "points", pts)
        seen = {}
        for i, p in enumerate(pts, start=1):
            if p in seen:
                raise RepresentationError(f"vertices {seen[p]} and {i} both map to {p}")
            seen[p] = i

    @property
    def n(self) -> int:
        return len(self.points)

    def __call__(self, v: int) -> Point:
        if not 1 <= v <= len(self.points):
            raise IndexError(f"vertex {v} outside 1..{len(self.points)}")
        return self.points[v - 1]

    def restrict(self, vertices: Sequence[int]) -> "Embedding":
        return Embedding(tuple(self(v) for v in vertices))


@dataclass(frozen=True)
class PointObstacle:
    at: Point


@dataclass(frozen=True)
class PolygonObstacle:
    """Open simple polygon; vertices are stored counter-clockwise."""
    vertices: tuple

    def __post_init__(self):
        pts = tuple(p if isinstance(p, Point) else Point(Fraction(p[0]), Fraction(p[1]))
                    for p in self.vertices)
        if len(pts) < 3:
            raise RepresentationError("a polygon needs at least three vertices")
        if not is_simple_polygon(pts):
            raise RepresentationError(f"polygon is not simple: {pts}")
        if signed_area2(pts) < 0:
            pts = pts[::-1]
        object.__setattr__(self, "vertices", pts)


@dataclass(frozen=True)
class FaceObstacle:
    """The open face ``face_id`` of ``arrangement``."""
    face_id: int
    arrangement: object = field(compare=False, repr=False, default=None)

    @property
    def face_ids(self) -> tuple:
        return (self.face_id,)


@dataclass(frozen=True)
class ClusterObstacle:
    """Union of open faces joined through shared vertex points.

    Produced by the minimizer in ``vertex_clusters`` mode.  The connecting
    vertex points never lie inside an open segment between two other
    vertices of a simple embedding, so only the faces matter for blocking.
    """
    face_ids: tuple
    arrangement: object = field(compare=False, repr=False, default=None)


Obstacle = Union[PointObstacle, PolygonObstacle, FaceObstacle, ClusterObstacle]


@dataclass(frozen=True)
class ObstacleRepresentation:
    graph: Graph
    embedding: Embedding
    obstacles: tuple = ()

    @property
    def h(self) -> int:
        return len(self.obstacles)


def is_simple_polygon(pts: Sequence[Point]) -> bool:
    m = len(pts)
    if len(set(pts)) != m or signed_area2(pts) == 0:
        return False
    for i in range(m):
        # consecutive edges x-s-y must not fold back onto each other
        x, s_, y = pts[i - 1], pts[i], pts[(i + 1) % m]
        if orientation(x, s_, y) == 0 and (x.x - s_.x) * (y.x - s_.x) + (x.y - s_.y) * (y.y - s_.y) > 0:
            return False
    edges = [(pts[i], pts[(i + 1) % m]) for i in range(m)]
    for i, j in itertools.combinations(range(m), 2):
        if j == i + 1 or (i == 0 and j == m - 1):
            continue
        if segments_intersect_closed(*edges[i], *edges[j]):
            return False
    return True


def polygon_interior_point(pts: Sequence[Point], avoid=lambda q: False) -> Point:
    """A point strictly inside a simple polygon, found by an exact scanline.

    ``avoid`` rejects candidates (e.g. isolated vertices); the probe then
    slides toward the left end of the same interior interval.
    """
    ys = sorted(set(p.y for p in pts))
    y0 = (ys[0] + ys[1]) / 2
    xs = []
    m = len(pts)
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if (a.y > y0) != (b.y > y0):
            xs.append(a.x + (y0 - a.y) * (b.x - a.x) / (b.y - a.y))
    xs.sort()
    q = Point((xs[0] + xs[1]) / 2, y0)
    while avoid(q):
        q = Point((xs[0] + q.x) / 2, y0)
    return q


def _segment_meets_polygon_interior(p: Point, q: Point, pts: Sequence[Point]) -> bool:
    ts = {Fraction(0), Fraction(1)}
    m = len(pts)
    for i in range(m):
        ts.update(segment_params(p, q, pts[i], pts[(i + 1) % m]))
    ts = sorted(ts)
    for t0, t1 in zip(ts, ts[1:]):
        if point_in_polygon(lerp(p, q, (t0 + t1) / 2), pts) > 0:
            return True
    return False


def _faces_met(obstacle, p: Point, q: Point) -> bool:
    arr = obstacle.arrangement
    if arr is None:
        raise RepresentationError("face obstacle carries no arrangement")
    met = set(arr.segment_faces(p, q))
    return any(f in met for f in obstacle.face_ids)


def segment_blocked(p: Point, q: Point, obstacles: Iterable[Obstacle]) -> bool:
    for ob in obstacles:
        if isinstance(ob, PointObstacle):
            if on_open_segment(ob.at, p, q):
                return True
        elif isinstance(ob, PolygonObstacle):
            if _segment_meets_polygon_interior(p, q, ob.vertices):
                return True
        elif isinstance(ob, (FaceObstacle, ClusterObstacle)):
            if _faces_met(ob, p, q):
                return True
        else:
            raise TypeError(f"unknown obstacle {ob!r}")
    return False


def is_blocked(u: int, w: int, emb: Embedding, obstacles: Iterable[Obstacle]) -> bool:
    if u == w:
        raise ValueError("is_blocked needs two distinct vertices")
    return segment_blocked(emb(u), emb(w), obstacles)


def visibility_graph(emb: Embedding, obstacles: Iterable[Obstacle]) -> Graph:
    obstacles = tuple(obstacles)
    n = emb.n
    return Graph(n, frozenset(
        (u, w) for u, w in itertools.combinations(range(1, n + 1), 2)
        if not is_blocked(u, w, emb, obstacles)))


@dataclass
class PairStatus:
    u: int
    w: int
    is_edge: bool
    blocked: bool

    @property
    def ok(self) -> bool:
        return self.is_edge != self.blocked

    @property
    def violation(self):
        if self.ok:
            return None
        return "edge-blocked" if self.is_edge else "non-edge-visible"


@dataclass
class VerificationReport:
    valid: bool
    pairs: list

    @property
    def violations(self) -> list:
        return [p for p in self.pairs if not p.ok]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [{"u": p.u, "w": p.w, "kind": p.violation} for p in self.violations],
            "pairs": [{"u": p.u, "w": p.w, "edge": p.is_edge, "blocked": p.blocked}
                      for p in self.pairs],
        }


def verify(rep: ObstacleRepresentation) -> VerificationReport:
    """Check every vertex pair; never stops at the first violation."""
    if rep.graph.n != rep.embedding.n:
        raise RepresentationError("graph and embedding disagree on n")
    pairs = [PairStatus(u, w, rep.graph.has_edge(u, w),
                        is_blocked(u, w, rep.embedding, rep.obstacles))
             for u, w in rep.graph.pairs()]
    return VerificationReport(all(p.ok for p in pairs), pairs)


def midpoint_representation(G: Graph, emb: Embedding) -> ObstacleRepresentation:
    """One point obstacle on the midpoint of every non-edge."""
    if G.n != emb.n:
        raise RepresentationError("graph and embedding disagree on n")
    obstacles = []
    for u, w in G.non_edges():
        mid = lerp(emb(u), emb(w), Fraction(1, 2))
        for a, b in G.pairs():
            if (a, b) == (u, w):
                continue
            if on_closed_segment(mid, emb(a), emb(b)):
                raise RepresentationError(
                    f"midpoint of non-edge {(u, w)} lies on segment {(a, b)}; "
                    "embedding is not in general position")
        obstacles.append(PointObstacle(mid))
    return ObstacleRepresentation(G, emb, tuple(obstacles))


def per_obstacle_decomposition(rep: ObstacleRepresentation) -> list[Graph]:
    """The graphs seen through each obstacle alone; their edge sets intersect to E(G)."""
    if not rep.obstacles:
        raise RepresentationError("decomposition needs at least one obstacle")
    if not verify(rep).valid:
        raise RepresentationError("representation is not valid")
    return [visibility_graph(rep.embedding, [ob]) for ob in rep.obstacles]


def intersect_edges(graphs: Sequence[Graph]) -> frozenset:
    edges = graphs[0].edges
    for g in graphs[1:]:
        edges = edges & g.edges
    return edges


def require_clearance(graph, emb: Embedding, obstacles) -> None:
    """Refuse obstacles whose closure touches a drawn edge (zero clearance)."""
    edges = graph.sorted_edges() if graph is not None else []
    for ob in obstacles:
        if isinstance(ob, (FaceObstacle, ClusterObstacle)):
            raise RepresentationError(
                "face obstacles are bounded by the drawn edges and have no clearance")
        for u, w in edges:
            p, q = emb(u), emb(w)
            if isinstance(ob, PointObstacle):
                touch = on_closed_segment(ob.at, p, q)
            else:
                vs = ob.vertices
                touch = (point_in_polygon(p, vs) >= 0 or point_in_polygon(q, vs) >= 0
                         or any(segments_intersect_closed(p, q, vs[i], vs[(i + 1) % len(vs)])
                                for i in range(len(vs))))
            if touch:
                raise RepresentationError(f"obstacle {ob} touches edge {(u, w)}")


@dataclass
class CanonicalizationReport:
    representation: ObstacleRepresentation
    split: list  # (input index, face ids) for obstacles that met several faces


def _faces_of_obstacle(ob, arr) -> tuple:
    if isinstance(ob, FaceObstacle):
        return (ob.face_id,)
    if isinstance(ob, ClusterObstacle):
        return tuple(ob.face_ids)
    if isinstance(ob, PointObstacle):
        if arr.on_drawing(ob.at):
            raise RepresentationError(f"point obstacle {ob.at} meets no face interior")
        return (arr.locate(ob.at),)
    # In a valid representation an open polygon avoids every open edge
    # segment, hence lies inside a single face.
    vs = ob.vertices
    q = polygon_interior_point(vs, avoid=arr.on_drawing)
    return (arr.locate(q),)


def canonicalize_representation(rep: ObstacleRepresentation, arr) -> CanonicalizationReport:
    """Replace every obstacle by the arrangement face(s) whose interiors it meets."""
    if not verify(rep).valid:
        raise RepresentationError("representation is not valid")
    out, split = [], []
    for i, ob in enumerate(rep.obstacles):
        faces = _faces_of_obstacle(ob, arr)
        if len(faces) > 1:
            split.append((i, faces))
        out.extend(FaceObstacle(f, arr) for f in faces)
    new = ObstacleRepresentation(rep.graph, rep.embedding, tuple(out))
    if not verify(new).valid:
        raise RepresentationError("canonical form failed to verify")
    return CanonicalizationReport(new, split)
