"""Super-order types of point sequences, simplicity, P* signs and perturbation."""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .geometry import (
    Point,
    concurrency_poly_xy,
    orientation,
    parallel_poly_xy,
    sextuple_type_xy,
    sign,
)

log = logging.getLogger(__name__)


class DuplicatePointError(ValueError):
    pass


class PerturbationError(RuntimeError):
    """Raised when the perturbation budget runs out; carries the residual degeneracy."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class SuperOrderType:
    n: int
    values: tuple

    @property
    def r(self) -> int:
        return len(self.values)

    def is_simple(self) -> bool:
        return 0 not in self.values

    def zeros(self) -> int:
        return self.values.count(0)

    def first_difference(self, other: "SuperOrderType"):
        """Index of the first differing entry, or None when equal."""
        if self.n != other.n:
            raise ValueError("super-order types of different lengths")
        for i, (a, b) in enumerate(zip(self.values, other.values)):
            if a != b:
                return i
        return None


@dataclass(frozen=True)
class OrderType:
    n: int
    values: tuple

    @staticmethod
    def triples(n: int):
        return list(itertools.combinations(range(1, n + 1), 3))


@lru_cache(maxsize=None)
def enumerate_admissible(n: int) -> tuple:
    """Canonical list of admissible index sextuples over {1, ..., n}.

    Each pair is written smaller index first; a sextuple is an ordered
    triple (A, B, C) of pairwise distinct pairs whose common intersection is
    empty.  Sorted lexicographically, so ``len`` is the r of the sequence.
    """
    if n < 3:
        return ()
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for A, B, C in itertools.permutations(pairs, 3):
        if set(A) & set(B) & set(C):
            continue
        out.append(A + B + C)
    out.sort()
    return tuple(out)


def _as_points(P) -> list[Point]:
    pts = [p if isinstance(p, Point) else Point(Fraction(p[0]), Fraction(p[1])) for p in P]
    seen = {}
    for i, p in enumerate(pts, start=1):
        if p in seen:
            raise DuplicatePointError(f"points {seen[p]} and {i} coincide at {p}")
        seen[p] = i
    return pts


def integer_coordinates(P: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale by the lcm of all denominators.

    Every sign computed in this module is invariant under positive scaling,
    so the integer copy gives the same answers much faster.
    """
    L = 1
    for p in P:
        L = math.lcm(L, p.x.denominator, p.y.denominator)
    return [(int(p.x * L), int(p.y * L)) for p in P]


def _index_coords(P):
    pts = _as_points(P)
    xy = integer_coordinates(pts)
    # 1-based lookup with a dummy at 0
    xs = [0] + [c[0] for c in xy]
    ys = [0] + [c[1] for c in xy]
    return pts, xs, ys


def super_order_type(P) -> SuperOrderType:
    pts, xs, ys = _index_coords(P)
    vals = tuple(
        sextuple_type_xy(xs[i1], ys[i1], xs[i2], ys[i2], xs[j1], ys[j1], xs[j2], ys[j2],
                         xs[k1], ys[k1], xs[k2], ys[k2])
        for i1, i2, j1, j2, k1, k2 in enumerate_admissible(len(pts))
    )
    return SuperOrderType(len(pts), vals)


def is_simple(P) -> bool:
    pts, xs, ys = _index_coords(P)
    for i1, i2, j1, j2, k1, k2 in enumerate_admissible(len(pts)):
        if sextuple_type_xy(xs[i1], ys[i1], xs[i2], ys[i2], xs[j1], ys[j1], xs[j2], ys[j2],
                            xs[k1], ys[k1], xs[k2], ys[k2]) == 0:
            return False
    return True


def degenerate_count(P) -> int:
    return super_order_type(P).zeros()


def pstar_sign(P) -> int:
    """Sign of the product of every parallelism and concurrency factor.

    Accumulated as a product of signs; the magnitudes are never multiplied.
    """
    pts, xs, ys = _index_coords(P)
    s = 1
    for i1, i2, j1, j2, k1, k2 in enumerate_admissible(len(pts)):
        a = (xs[i1], ys[i1], xs[i2], ys[i2])
        b = (xs[j1], ys[j1], xs[j2], ys[j2])
        c = (xs[k1], ys[k1], xs[k2], ys[k2])
        s *= sign(parallel_poly_xy(*a, *b))
        s *= sign(parallel_poly_xy(*a, *c))
        s *= sign(concurrency_poly_xy(*a, *b, *c))
        if s == 0:
            return 0
    return s


def order_type(P) -> OrderType:
    pts = _as_points(P)
    vals = tuple(orientation(pts[i - 1], pts[j - 1], pts[k - 1])
                 for i, j, k in itertools.combinations(range(1, len(pts) + 1), 3))
    return OrderType(len(pts), vals)


def _chebyshev_min_distance(pts) -> Fraction:
    return min(max(abs(p.x - q.x), abs(p.y - q.y))
               for p, q in itertools.combinations(pts, 2))


def _degenerate_members(P, sot: SuperOrderType) -> list[int]:
    """Vertex indices that appear in some degenerate sextuple, most frequent first."""
    counts = {}
    for idx, v in zip(enumerate_admissible(sot.n), sot.values):
        if v == 0:
            for i in set(idx):
                counts[i] = counts.get(i, 0) + 1
    return sorted(counts, key=lambda i: (-counts[i], i))


def perturb_to_simple(P, *, graph=None, obstacles=None, seed: int = 0,
                      halvings: int = 64, attempts: int = 32,
                      denominator_bits: int = 32) -> list[Point]:
    """Move points one at a time until the sequence is simple.

    A move is accepted only if it strictly lowers the number of degenerate
    sextuples, keeps the type of every non-degenerate sextuple, and (when
    ``obstacles`` are given) leaves the visibility graph unchanged.  The step
    radius starts at half the smallest Chebyshev distance between points and
    is halved after every ``attempts`` rejections.
    """
    pts = _as_points(P)
    if len(pts) < 3:
        return pts
    rng = np.random.default_rng(seed)
    check_vis = None
    if obstacles is not None:
        from .representation import Embedding, require_clearance, visibility_graph
        require_clearance(graph, Embedding(tuple(pts)), obstacles)
        target = visibility_graph(Embedding(tuple(pts)), obstacles)

        def check_vis(cand):
            return visibility_graph(Embedding(tuple(cand)), obstacles) == target

    sot = super_order_type(pts)
    zeros = sot.zeros()
    if zeros == 0:
        return pts
    rho = _chebyshev_min_distance(pts) / 2
    den = 1 << denominator_bits
    for _ in range(halvings):
        for _ in range(attempts):
            members = _degenerate_members(pts, sot)
            # favour the point in most degenerate sextuples, but not exclusively
            pick = members[0] if rng.random() < 0.5 else members[int(rng.integers(len(members)))]
            ox = Fraction(int(rng.integers(-den, den + 1)), den) * rho
            oy = Fraction(int(rng.integers(-den, den + 1)), den) * rho
            cand = list(pts)
            cand[pick - 1] = Point(pts[pick - 1].x + ox, pts[pick - 1].y + oy)
            if len(set(cand)) != len(cand):
                continue
            new = super_order_type(cand)
            new_zeros = new.zeros()
            if new_zeros >= zeros:
                continue
            if any(a != 0 and a != b for a, b in zip(sot.values, new.values)):
                continue
            if check_vis is not None and not check_vis(cand):
                continue
            pts, sot, zeros = cand, new, new_zeros
            log.debug("perturbed point %d, %d degenerate sextuples left", pick, zeros)
            if zeros == 0:
                return pts
        rho /= 2
    raise PerturbationError(
        f"perturbation budget exhausted with {zeros} degenerate sextuples left", zeros)
