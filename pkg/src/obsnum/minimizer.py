"""Minimum number of obstacles for a fixed embedding, and experiments built on it.

For a simple embedding the candidate obstacles are the faces of the
planarized drawing; the minimum is a minimum hitting set over the
non-edge/face incidence.  ``vertex_clusters`` mode additionally lets an
obstacle be a union of faces glued through vertex points.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .arrangement import Arrangement, coverage_matrix, planarize
from .representation import (
    ClusterObstacle,
    Embedding,
    FaceObstacle,
    Graph,
    ObstacleRepresentation,
)
from .super_order import PerturbationError, is_simple, perturb_to_simple

log = logging.getLogger(__name__)

FACES = "faces"
VERTEX_CLUSTERS = "vertex_clusters"


class BudgetExceeded(RuntimeError):
    def __init__(self, message, upper_bound=None):
        super().__init__(message)
        self.upper_bound = upper_bound


@dataclass
class MinimizeResult:
    count: int
    faces: tuple               # face ids, or tuples of face ids in cluster mode
    certificate: ObstacleRepresentation
    arrangement: Arrangement = field(repr=False)
    mode: str = FACES
    nodes_explored: int = 0


# --- set cover on bitmasks ---

def _popcount(x: int) -> int:
    return bin(x).count("1")


def greedy_cover(universe: int, sets: list[int]) -> list[int]:
    """Largest-gain set first, ties to the lowest index."""
    chosen, left = [], universe
    while left:
        best, gain = -1, 0
        for i, s in enumerate(sets):
            g = _popcount(s & left)
            if g > gain:
                best, gain = i, g
        if best < 0:
            raise ValueError("universe cannot be covered")
        chosen.append(best)
        left &= ~sets[best]
    return chosen


class _Search:
    def __init__(self, sets, node_limit):
        self.sets = sets
        self.node_limit = node_limit
        self.nodes = 0
        self.best = None

    def _tick(self, best):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded("branch-and-bound node limit reached", best)

    def _options(self, left, allowed):
        """Element of ``left`` with fewest covering sets, and those sets by gain."""
        best_opts = None
        x = left
        while x:
            low = x & -x
            x ^= low
            opts = [i for i in allowed if self.sets[i] & low]
            if best_opts is None or len(opts) < len(best_opts):
                best_opts = opts
                if len(opts) <= 1:
                    break
        best_opts.sort(key=lambda i: (-_popcount(self.sets[i] & left), i))
        return best_opts

    def _lower_bound(self, left, allowed):
        top = max((_popcount(self.sets[i] & left) for i in allowed), default=0)
        if top == 0:
            return None
        return -(-_popcount(left) // top)

    def minimum(self, universe, upper):
        """Optimal cover size, seeded with a known cover of size ``upper``."""
        allowed = [i for i, s in enumerate(self.sets) if s & universe]
        self.best = upper

        def rec(left, depth):
            self._tick(self.best)
            if not left:
                self.best = min(self.best, depth)
                return
            lb = self._lower_bound(left, allowed)
            if lb is None or depth + lb >= self.best:
                return
            for i in self._options(left, allowed):
                rec(left & ~self.sets[i], depth + 1)
        rec(universe, 0)
        return self.best

    def feasible(self, left, allowed, budget):
        self._tick(self.best)
        if not left:
            return True
        if budget == 0:
            return False
        lb = self._lower_bound(left, allowed)
        if lb is None or lb > budget:
            return False
        for i in self._options(left, allowed):
            if self.feasible(left & ~self.sets[i], allowed, budget - 1):
                return True
        return False


def min_cover(universe: int, sets: list[int], node_limit=None):
    """Lexicographically smallest minimum cover (as a sorted index tuple)."""
    if not universe:
        return (), 0
    greedy = greedy_cover(universe, sets)
    search = _Search(sets, node_limit)
    k = search.minimum(universe, len(greedy))
    useful = [i for i, s in enumerate(sets) if s & universe]
    chosen, left = [], universe
    for slot in range(k):
        remaining = k - slot - 1
        for i in useful:
            if chosen and i <= chosen[-1]:
                continue
            rest = left & ~sets[i]
            allowed = [j for j in useful if j > i]
            if search.feasible(rest, allowed, remaining):
                chosen.append(i)
                left = rest
                break
        else:  # pragma: no cover - k is optimal so some choice always works
            raise AssertionError("lexicographic reconstruction failed")
    return tuple(chosen), search.nodes


def vertex_clusters(arr: Arrangement) -> list[tuple]:
    """Faces grouped by connectivity through shared original vertices.

    Growing a cluster never unblocks a non-edge and never blocks an edge, so
    an optimal cluster solution may always use whole groups.
    """
    nf = len(arr.faces)
    parent = list(range(nf))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a
    by_vertex = {}
    for f in range(nf):
        for v in arr.original_vertices_of(f):
            by_vertex.setdefault(v, []).append(f)
    for fs in by_vertex.values():
        for f in fs[1:]:
            parent[find(f)] = find(fs[0])
    groups = {}
    for f in range(nf):
        groups.setdefault(find(f), []).append(f)
    return sorted(tuple(g) for g in groups.values())


def _solve(G: Graph, emb: Embedding, mode: str, node_limit, greedy=False) -> MinimizeResult:
    if mode not in (FACES, VERTEX_CLUSTERS):
        raise ValueError(f"unknown mode {mode!r}")
    arr = planarize(G, emb)
    cov = coverage_matrix(arr)
    face_masks = cov.face_masks()
    universe = (1 << len(cov.rows)) - 1
    if mode == FACES:
        candidates = [(f,) for f in range(len(arr.faces))]
    else:
        candidates = vertex_clusters(arr)
    sets = [0] * len(candidates)
    for i, group in enumerate(candidates):
        for f in group:
            sets[i] |= face_masks[f]
    nodes = 0
    if greedy:
        chosen = tuple(greedy_cover(universe, sets)) if universe else ()
    else:
        chosen, nodes = min_cover(universe, sets, node_limit)
    if mode == FACES:
        obstacles = tuple(FaceObstacle(candidates[i][0], arr) for i in chosen)
        picked = tuple(candidates[i][0] for i in chosen)
    else:
        obstacles = tuple(ClusterObstacle(candidates[i], arr) for i in chosen)
        picked = tuple(candidates[i] for i in chosen)
    cert = ObstacleRepresentation(G, emb, obstacles)
    return MinimizeResult(len(chosen), picked, cert, arr, mode, nodes)


def min_obstacles_fixed(G: Graph, emb: Embedding, mode: str = FACES,
                        node_limit: int | None = 2_000_000) -> MinimizeResult:
    """Exact minimum obstacle count for this embedding (branch and bound)."""
    return _solve(G, emb, mode, node_limit)


def greedy_fixed(G: Graph, emb: Embedding) -> MinimizeResult:
    return _solve(G, emb, FACES, None, greedy=True)


# --- embedding search ---

@dataclass
class SearchConfig:
    budget: int = 1000
    seed: int = 0
    coord_range: int | None = None      # defaults to n**4
    simplicity_retries: int = 8

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be at least 1")


@dataclass
class SearchResult:
    best: MinimizeResult
    embedding: Embedding
    samples: int
    trace: list                # best count after each sample


def random_simple_embedding(n: int, rng: np.random.Generator, coord_range: int | None = None,
                            retries: int = 8) -> Embedding:
    """Integer points uniform in [0, R]^2 (R = n**4 by default), perturbed to simple."""
    R = coord_range if coord_range is not None else max(n ** 4, 16)
    for _ in range(retries):
        xy = rng.integers(0, R + 1, size=(n, 2))
        pts = [(int(x), int(y)) for x, y in xy]
        if len(set(pts)) != n:
            continue
        if n < 3 or is_simple(pts):
            return Embedding(tuple(pts))
        try:
            return Embedding(tuple(perturb_to_simple(pts, seed=int(rng.integers(2 ** 31)))))
        except PerturbationError:
            continue
    raise RuntimeError(f"no simple embedding of {n} points after {retries} tries")


def obstacle_number_search(G: Graph, cfg: SearchConfig) -> SearchResult:
    """Best fixed-embedding minimum over random embeddings: an upper bound on obs(G)."""
    rng = np.random.default_rng(cfg.seed)
    floor = 0 if G.is_complete() else 1
    best, best_emb, trace = None, None, []
    for s in range(cfg.budget):
        emb = random_simple_embedding(G.n, rng, cfg.coord_range, cfg.simplicity_retries)
        res = min_obstacles_fixed(G, emb)
        if best is None or res.count < best.count:
            best, best_emb = res, emb
        trace.append(best.count)
        if best.count <= floor:
            break
    return SearchResult(best, best_emb, len(trace), trace)


# --- slabs ---

@dataclass
class Slab:
    index: int
    vertices: tuple            # original vertex ids, by increasing x
    x_range: tuple             # (x of first point, x of last point)
    graph: Graph
    minimum: int
    faces: tuple
    certificate_obstacles_inside: int


@dataclass
class SlabReport:
    k: int
    m: int
    order: tuple               # vertex ids sorted by x
    slabs: list
    whole_minimum: int
    whole_faces: tuple


def slab_report(G: Graph, emb: Embedding, k: int) -> SlabReport:
    """Cut the x-sorted vertices into floor(n/k) slabs of k and solve each one."""
    n = G.n
    if not 1 <= k <= n:
        raise ValueError(f"slab size must be in 1..{n}")
    xs = [emb(v).x for v in range(1, n + 1)]
    if len(set(xs)) != n:
        raise ValueError("two vertices share an x-coordinate; perturb the embedding first")
    order = tuple(sorted(range(1, n + 1), key=lambda v: emb(v).x))
    whole = min_obstacles_fixed(G, emb)
    arr = whole.arrangement
    slabs = []
    for i in range(n // k):
        vs = order[i * k:(i + 1) * k]
        sub_g = G.induced(vs)
        sub_e = emb.restrict(vs)
        lo, hi = emb(vs[0]).x, emb(vs[-1]).x
        res = min_obstacles_fixed(sub_g, sub_e)
        minimum, faces = res.count, res.faces
        inside = 0
        for f in whole.faces:
            face = arr.faces[f]
            if face.bounded and all(lo <= arr.nodes[j].x <= hi for j in face.boundary[0]):
                inside += 1
        slabs.append(Slab(i, vs, (lo, hi), sub_g, minimum, faces, inside))
    return SlabReport(k, n // k, order, slabs, whole.count, whole.faces)


def exhaustive_min_faces(G: Graph, emb: Embedding, max_size: int | None = None):
    """Reference solver: try face subsets by increasing size, in lexicographic order.

    Faces covering no non-edge are skipped; they never appear in a minimum
    cover.  Returns ``(count, faces)``.
    """
    import itertools

    arr = planarize(G, emb)
    cov = coverage_matrix(arr)
    if not cov.rows:
        return 0, ()
    masks = cov.face_masks()
    full = (1 << len(cov.rows)) - 1
    useful = [f for f, m in enumerate(masks) if m]
    top = len(useful) if max_size is None else min(max_size, len(useful))
    for size in range(1, top + 1):
        for combo in itertools.combinations(useful, size):
            acc = 0
            for f in combo:
                acc |= masks[f]
            if acc == full:
                return size, combo
    raise BudgetExceeded("no cover within the size limit")
