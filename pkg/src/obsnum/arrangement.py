"""Planarization of a straight-line drawing and its faces.

Every pair of crossing edges gets a node at the crossing; the drawing is
then a plane graph whose faces are walked with the usual half-edge ``next``
rule.  Counter-clockwise walks bound bounded faces, the others are holes
(or the outside of the whole drawing) and are attached to the face that
contains them by exact point location.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from .geometry import (
    Point,
    cross,
    lerp,
    on_closed_segment,
    orientation,
    point_in_polygon,
    proper_crossing,
    segment_params,
    signed_area2,
)
from .representation import Embedding, Graph
from .super_order import is_simple


class NotSimpleError(ValueError):
    """The embedding has a degenerate sextuple; run ``perturb_to_simple`` first."""


@dataclass
class Face:
    id: int
    boundary: list            # closed walks, each a list of node indices
    bounded: bool
    witness: Point

    @property
    def outer_walk(self):
        return self.boundary[0] if self.bounded else None


@dataclass
class Arrangement:
    graph: Graph
    embedding: Embedding
    nodes: list                # Points; the first n are the original vertices
    arcs: list                 # (i, j) node index pairs, i < j
    faces: list                # Face, indexed by id; faces[0] is unbounded
    _ccw: list = field(default_factory=list, repr=False)   # (walk polygon, area2, face id, bbox)
    _node_set: set = field(default_factory=set, repr=False)
    _isolated: list = field(default_factory=list, repr=False)

    @property
    def crossings(self) -> int:
        return len(self.nodes) - self.graph.n

    def arcs_as_segments(self):
        return [(self.nodes[i], self.nodes[j]) for i, j in self.arcs]

    def components(self) -> int:
        parent = list(range(len(self.nodes)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        for i, j in self.arcs:
            parent[find(i)] = find(j)
        return len({find(i) for i in range(len(self.nodes))})

    def euler_ok(self) -> bool:
        return len(self.nodes) - len(self.arcs) + len(self.faces) == 1 + self.components()

    def on_drawing(self, q: Point) -> bool:
        if q in self._node_set:
            return True
        return any(on_closed_segment(q, a, b) for a, b in self.arcs_as_segments())

    def locate(self, q: Point) -> int:
        """Id of the face containing ``q``; ``q`` must be off the drawing."""
        best, best_area = 0, None
        for poly, area2, fid, (x0, y0, x1, y1) in self._ccw:
            if not (x0 < q.x < x1 and y0 < q.y < y1):
                continue
            if best_area is not None and area2 >= best_area:
                continue
            if point_in_polygon(q, poly) > 0:
                best, best_area = fid, area2
        return best

    def segment_faces(self, p: Point, q: Point) -> list[int]:
        """Faces met by the open segment pq, in order from p, consecutive repeats merged.

        Sub-intervals lying along the drawing meet no face and are skipped.
        """
        ts = {Fraction(0), Fraction(1)}
        for a, b in self.arcs_as_segments():
            ts.update(segment_params(p, q, a, b))
        for v in self._isolated:
            ts.update(_point_param(p, q, v))
        ts = sorted(ts)
        out = []
        for t0, t1 in zip(ts, ts[1:]):
            m = lerp(p, q, (t0 + t1) / 2)
            if self.on_drawing(m):
                continue
            f = self.locate(m)
            if not out or out[-1] != f:
                out.append(f)
        return out

    def face_polygon(self, fid: int) -> list[Point]:
        """Outer boundary walk of a bounded face as a vertex list (empty for the outer face)."""
        face = self.faces[fid]
        if not face.bounded:
            return []
        return [self.nodes[i] for i in face.boundary[0]]

    def original_vertices_of(self, fid: int) -> set[int]:
        n = self.graph.n
        return {i + 1 for walk in self.faces[fid].boundary for i in walk if i < n}


def _point_param(p: Point, q: Point, v: Point):
    if orientation(p, q, v) != 0:
        return []
    dx, dy = q.x - p.x, q.y - p.y
    t = Fraction((v.x - p.x) * dx + (v.y - p.y) * dy) / (dx * dx + dy * dy)
    return [t] if 0 <= t <= 1 else []


def _half_plane(dx, dy) -> int:
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half_plane(*u), _half_plane(*v)
    if hu != hv:
        return hu - hv
    c = cross(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


def _left_witness(nodes, arcs, isolated, a: Point, b: Point, skip: int) -> Point:
    """A point just left of the midpoint of the directed arc a->b.

    Shoots a ray along the left normal and stops halfway to the first thing
    it hits, so the returned point lies in the face on the left of a->b.
    """
    m = lerp(a, b, Fraction(1, 2))
    nx, ny = -(b.y - a.y), b.x - a.x
    far = Point(m.x + nx, m.y + ny)
    best = Fraction(1)
    for k, (i, j) in enumerate(arcs):
        if k == skip:
            continue
        for s in segment_params(m, far, nodes[i], nodes[j]):
            if 0 < s < best:
                best = s
    for v in isolated:
        for s in _point_param(m, far, v):
            if 0 < s < best:
                best = s
    return lerp(m, far, best / 2)


def planarize(G: Graph, emb: Embedding, *, check_simple: bool = True) -> Arrangement:
    if G.n != emb.n:
        raise ValueError("graph and embedding disagree on n")
    if check_simple and emb.n >= 3 and not is_simple(emb.points):
        raise NotSimpleError("embedding is not simple; perturb it to simple position first")

    nodes = list(emb.points)
    index = {p: i for i, p in enumerate(nodes)}
    edges = G.sorted_edges()
    on_edge = {e: [] for e in edges}
    for e, f in itertools.combinations(edges, 2):
        if set(e) & set(f):
            continue
        x = proper_crossing(emb(e[0]), emb(e[1]), emb(f[0]), emb(f[1]))
        if x is None:
            continue
        if x not in index:
            index[x] = len(nodes)
            nodes.append(x)
        on_edge[e].append(index[x])
        on_edge[f].append(index[x])

    arcs = set()
    for (u, w), inner in on_edge.items():
        a = emb(u)
        d = emb(w) - a
        key = (lambda i: (nodes[i].x - a.x) * d.x + (nodes[i].y - a.y) * d.y)
        chain = [u - 1] + sorted(inner, key=key) + [w - 1]
        for i, j in zip(chain, chain[1:]):
            arcs.add((min(i, j), max(i, j)))
    arcs = sorted(arcs)

    # rotation system: outgoing neighbours sorted counter-clockwise
    out = {i: [] for i in range(len(nodes))}
    for i, j in arcs:
        out[i].append(j)
        out[j].append(i)
    pos = {}
    for i, nbrs in out.items():
        p = nodes[i]
        nbrs.sort(key=cmp_to_key(lambda s, t: _angle_cmp(
            (nodes[s].x - p.x, nodes[s].y - p.y), (nodes[t].x - p.x, nodes[t].y - p.y))))
        for k, j in enumerate(nbrs):
            pos[(i, j)] = k

    def nxt(h):
        u, v = h
        ring = out[v]
        # the half-edge leaving v just clockwise of v->u keeps the face on the left
        return (v, ring[(pos[(v, u)] - 1) % len(ring)])

    walks = []
    seen = set()
    for i, j in arcs:
        for h in ((i, j), (j, i)):
            if h in seen:
                continue
            walk, cur = [], h
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                cur = nxt(cur)
            walks.append(walk)

    isolated = [nodes[i] for i in range(len(nodes)) if not out[i]]
    arc_index = {a: k for k, a in enumerate(arcs)}

    bounded, holes = [], []
    for walk in walks:
        poly_idx = [h[0] for h in walk]
        area2 = signed_area2([nodes[i] for i in poly_idx])
        (bounded if area2 > 0 else holes).append((walk, poly_idx, area2))

    def sort_key(item):
        _, idx, _ = item
        coords = sorted(nodes[i] for i in set(idx))
        return (coords[0], len(idx), coords)
    bounded.sort(key=sort_key)

    faces = [Face(0, [], False, Point(Fraction(0), Fraction(0)))]
    ccw = []
    for fid, (walk, idx, area2) in enumerate(bounded, start=1):
        u, v = walk[0]
        wit = _left_witness(nodes, arcs, isolated, nodes[u], nodes[v],
                            arc_index[(min(u, v), max(u, v))])
        faces.append(Face(fid, [idx], True, wit))
        poly = [nodes[i] for i in idx]
        box = (min(p.x for p in poly), min(p.y for p in poly),
               max(p.x for p in poly), max(p.y for p in poly))
        ccw.append((poly, area2, fid, box))

    arr = Arrangement(G, emb, nodes, arcs, faces, ccw, set(nodes), isolated)

    for walk, idx, _ in holes:
        u, v = walk[0]
        wit = _left_witness(nodes, arcs, isolated, nodes[u], nodes[v],
                            arc_index[(min(u, v), max(u, v))])
        faces[arr.locate(wit)].boundary.append(idx)

    if nodes:
        left = min(nodes)
        faces[0].witness = Point(left.x - 1, left.y)
    return arr


@dataclass
class CoverageMatrix:
    rows: list                 # non-edges (u, w)
    matrix: np.ndarray         # bool, rows x faces
    sequences: list            # face sequence per row

    def row_mask(self, r: int) -> int:
        return sum(1 << int(f) for f in np.flatnonzero(self.matrix[r]))

    def face_masks(self) -> list[int]:
        """Bitmask over rows for every face."""
        masks = []
        for f in range(self.matrix.shape[1]):
            masks.append(sum(1 << int(r) for r in np.flatnonzero(self.matrix[:, f])))
        return masks


def non_edge_face_sequence(arr: Arrangement, u: int, w: int) -> list[int]:
    if arr.graph.has_edge(u, w):
        raise ValueError(f"{(u, w)} is an edge, not a non-edge")
    return arr.segment_faces(arr.embedding(u), arr.embedding(w))


def coverage_matrix(arr: Arrangement) -> CoverageMatrix:
    rows = arr.graph.non_edges()
    mat = np.zeros((len(rows), len(arr.faces)), dtype=bool)
    seqs = []
    for r, (u, w) in enumerate(rows):
        seq = non_edge_face_sequence(arr, u, w)
        seqs.append(seq)
        mat[r, seq] = True
    return CoverageMatrix(rows, mat, seqs)
