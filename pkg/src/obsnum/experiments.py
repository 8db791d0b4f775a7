"""Randomised experiments: super-order census, order-type gap search and
super-order-preserving perturbations."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .geometry import Point
from .minimizer import exhaustive_min_faces, min_obstacles_fixed, random_simple_embedding
from .representation import Embedding, Graph
from .super_order import is_simple, order_type, super_order_type


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, frozenset(e for e, k in zip(pairs, keep) if k))


def sot_string(values) -> str:
    return "".join("+" if v > 0 else ("-" if v < 0 else "0") for v in values)


@dataclass
class Census:
    n: int
    samples: int
    vectors: set = field(default_factory=set)
    trace: list = field(default_factory=list)   # distinct count after each sample

    @property
    def distinct(self) -> int:
        return len(self.vectors)

    def merge(self, other: "Census") -> "Census":
        if other.n != self.n:
            raise ValueError("cannot merge censuses for different n")
        return Census(self.n, self.samples + other.samples, self.vectors | other.vectors,
                      self.trace + [len(self.vectors | other.vectors)])


def census(n: int, samples: int, seed: int = 0) -> Census:
    """Distinct super-order types among random simple point sequences."""
    rng = np.random.default_rng(seed)
    out = Census(n, samples)
    for _ in range(samples):
        emb = random_simple_embedding(n, rng)
        out.vectors.add(sot_string(super_order_type(emb.points).values))
        out.trace.append(len(out.vectors))
    return out


def sot_preserving_perturbation(points, rng: np.random.Generator, scale: Fraction,
                                tries: int = 64):
    """Jitter every point by at most ``scale`` (Chebyshev) and keep the result
    only if its super-order type is unchanged; shrinks the jitter on failure."""
    target = super_order_type(points)
    den = 1 << 20
    for _ in range(tries):
        cand = [Point(p.x + Fraction(int(rng.integers(-den, den + 1)), den) * scale,
                      p.y + Fraction(int(rng.integers(-den, den + 1)), den) * scale)
                for p in points]
        if len(set(cand)) == len(cand) and super_order_type(cand) == target:
            return cand
        scale /= 2
    return None


@dataclass
class GapPair:
    graph: Graph
    first: Embedding
    second: Embedding
    counts: tuple
    order_types_equal: bool
    sot_equal: bool
    reverified: bool


@dataclass
class GapSearch:
    n: int
    budget: int
    trials: int
    found: list


def _orientation_det(p, q, r) -> int:
    # independent of geometry.orientation: full 3x3 determinant with a ones column
    d = (p.x * (q.y - r.y) - p.y * (q.x - r.x) + (q.x * r.y - q.y * r.x))
    return (d > 0) - (d < 0)


def _order_type_det(pts) -> tuple:
    return tuple(_orientation_det(pts[i], pts[j], pts[k])
                 for i, j, k in itertools.combinations(range(len(pts)), 3))


def ordertype_gap(n: int, budget: int, seed: int = 0, jitter: float = 0.25) -> GapSearch:
    """Look for two simple embeddings of one graph with the same order type
    but different fixed-embedding minima."""
    rng = np.random.default_rng(seed)
    found = []
    trials = 0
    R = max(n ** 4, 16)
    for _ in range(budget):
        trials += 1
        G = random_graph(n, rng)
        if G.is_complete():
            continue
        e1 = random_simple_embedding(n, rng)
        ot = order_type(e1.points)
        scale = Fraction(R) * Fraction(jitter).limit_denominator(1000)
        e2 = None
        for _ in range(16):
            cand = [(p.x + int(rng.integers(-scale, scale + 1)), p.y + int(rng.integers(-scale, scale + 1)))
                    for p in e1.points]
            if len(set(cand)) == n and is_simple(cand) and order_type(cand) == ot:
                e2 = Embedding(tuple(cand))
                break
        if e2 is None:
            continue
        c1 = min_obstacles_fixed(G, e1).count
        c2 = min_obstacles_fixed(G, e2).count
        if c1 == c2:
            continue
        ot_eq = _order_type_det(e1.points) == _order_type_det(e2.points)
        re = (exhaustive_min_faces(G, e1)[0], exhaustive_min_faces(G, e2)[0]) == (c1, c2)
        sot_eq = super_order_type(e1.points) == super_order_type(e2.points)
        found.append(GapPair(G, e1, e2, (c1, c2), ot_eq, sot_eq, re and ot_eq))
        break
    return GapSearch(n, budget, trials, found)
