"""Exact rational planar primitives and the sextuple predicates.

Every coordinate is a :class:`fractions.Fraction`; no predicate here ever
touches a float.  The low-level ``_xy`` helpers are written against plain
numbers so callers that have already cleared denominators can feed them
integers (much faster) and get identical signs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Union

Scalar = Fraction
Number = Union[int, Fraction]


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, s: Number) -> "Point":
        return Point(self.x * s, self.y * s)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction.

    Floats are refused: a float literal like 0.1 is not the rational the
    caller had in mind.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates; "
                        "pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def point(x, y) -> Point:
    return Point(scalar(x), scalar(y))


class DirectedLine(NamedTuple):
    """Line through ``p1`` and ``p2``, directed from ``p1`` toward ``p2``."""
    p1: Point
    p2: Point

    @property
    def direction(self) -> Point:
        return self.p2 - self.p1


def directed_line(p1: Point, p2: Point) -> DirectedLine:
    if p1 == p2:
        raise ValueError(f"a line needs two distinct points, got {p1} twice")
    return DirectedLine(p1, p2)


class Sextuple(NamedTuple):
    a1: Point
    a2: Point
    b1: Point
    b2: Point
    c1: Point
    c2: Point

    @property
    def lines(self) -> tuple[DirectedLine, DirectedLine, DirectedLine]:
        return (DirectedLine(self.a1, self.a2), DirectedLine(self.b1, self.b2),
                DirectedLine(self.c1, self.c2))


class Parallel:
    """Marker returned by :func:`line_intersection` for distinct parallel lines."""

    def __repr__(self):
        return "Parallel"


class Identical:
    """Marker returned by :func:`line_intersection` for coincident carriers."""

    def __repr__(self):
        return "Identical"


PARALLEL = Parallel()
IDENTICAL = Identical()


def sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 counter-clockwise, 0 collinear, -1 clockwise."""
    return sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def line_intersection(l1: DirectedLine, l2: DirectedLine):
    """Intersection of the carrier lines of ``l1`` and ``l2``.

    Returns a :class:`Point`, or one of the markers ``PARALLEL`` /
    ``IDENTICAL``.
    """
    d1 = l1.direction
    d2 = l2.direction
    den = cross(d1.x, d1.y, d2.x, d2.y)
    if den == 0:
        if orientation(l1.p1, l1.p2, l2.p1) == 0:
            return IDENTICAL
        return PARALLEL
    w = l2.p1 - l1.p1
    t = Fraction(cross(w.x, w.y, d2.x, d2.y)) / den
    return Point(l1.p1.x + t * d1.x, l1.p1.y + t * d1.y)


def _pairs(T: Sextuple):
    return ((T.a1, T.a2), (T.b1, T.b2), (T.c1, T.c2))


def is_admissible(T: Sextuple) -> bool:
    pairs = _pairs(T)
    if any(p == q for p, q in pairs):
        return False
    sets = [frozenset(pq) for pq in pairs]
    if sets[0] == sets[1] or sets[1] == sets[2] or sets[2] == sets[0]:
        return False
    return not (sets[0] & sets[1] & sets[2])


def _require_admissible(T: Sextuple) -> None:
    if not is_admissible(T):
        raise ValueError(f"sextuple is not admissible: {T}")


def is_degenerate(T: Sextuple) -> bool:
    """True if a line is vertical, A is parallel to B or C, or A, B, C are concurrent."""
    _require_admissible(T)
    A, B, C = T.lines
    if any(line.p1.x == line.p2.x for line in (A, B, C)):
        return True
    ab = line_intersection(A, B)
    ac = line_intersection(A, C)
    if not isinstance(ab, Point) or not isinstance(ac, Point):
        return True
    # A meets B in a single point; the three lines share a point iff C passes through it.
    return orientation(C.p1, C.p2, ab) == 0


def _param_on_a(ax1, ay1, dax, day, bx1, by1, dbx, dby):
    """Numerator and denominator of t with a1 + t*dA on line B."""
    return cross(dbx, dby, bx1 - ax1, by1 - ay1), cross(dbx, dby, dax, day)


def sextuple_type_xy(ax1, ay1, ax2, ay2, bx1, by1, bx2, by2, cx1, cy1, cx2, cy2) -> int:
    """Type of a sextuple given as raw coordinates (ints or Fractions).

    Admissibility is the caller's business.
    """
    if ax1 == ax2 or bx1 == bx2 or cx1 == cx2:
        return 0
    dax, day = ax2 - ax1, ay2 - ay1
    nb, db = _param_on_a(ax1, ay1, dax, day, bx1, by1, bx2 - bx1, by2 - by1)
    if db == 0:
        return 0
    nc, dc = _param_on_a(ax1, ay1, dax, day, cx1, cy1, cx2 - cx1, cy2 - cy1)
    if dc == 0:
        return 0
    # sign(tB - tC) with tB = nb/db, tC = nc/dc
    s = sign(nb * dc - nc * db) * sign(db) * sign(dc)
    # tB before tC on A gives -1
    return s


def sextuple_type(T: Sextuple) -> int:
    """-1 if A meets B before it meets C (walking from a1 to a2), +1 if after, 0 if degenerate."""
    _require_admissible(T)
    a1, a2, b1, b2, c1, c2 = T
    return sextuple_type_xy(a1.x, a1.y, a2.x, a2.y, b1.x, b1.y, b2.x, b2.y,
                            c1.x, c1.y, c2.x, c2.y)


def parallel_poly_xy(ax1, ay1, ax2, ay2, bx1, by1, bx2, by2):
    return (ax1 - ax2) * (by1 - by2) - (bx1 - bx2) * (ay1 - ay2)


def parallel_poly(a1: Point, a2: Point, b1: Point, b2: Point) -> Fraction:
    """x(a1-a2)*y(b1-b2) - x(b1-b2)*y(a1-a2); zero iff the lines are parallel or equal."""
    if a1 == a2 or b1 == b2:
        raise ValueError("parallel_poly needs two distinct points per line")
    return Fraction(parallel_poly_xy(a1.x, a1.y, a2.x, a2.y, b1.x, b1.y, b2.x, b2.y))


def _homogeneous_row(x1, y1, x2, y2):
    # (intercept, slope, 1) scaled by x1 - x2
    return (x1 * y2 - x2 * y1, y1 - y2, x1 - x2)


def concurrency_poly_xy(ax1, ay1, ax2, ay2, bx1, by1, bx2, by2, cx1, cy1, cx2, cy2):
    ra = _homogeneous_row(ax1, ay1, ax2, ay2)
    rb = _homogeneous_row(bx1, by1, bx2, by2)
    rc = _homogeneous_row(cx1, cy1, cx2, cy2)
    det = (ra[0] * (rb[1] * rc[2] - rb[2] * rc[1])
           - ra[1] * (rb[0] * rc[2] - rb[2] * rc[0])
           + ra[2] * (rb[0] * rc[1] - rb[1] * rc[0]))
    return ra[2] * rb[2] * rc[2] * det


def concurrency_poly(T: Sextuple) -> Fraction:
    """Slope/intercept determinant of A, B, C with the x-differences cleared.

    Each row (y-intercept, slope, 1) is multiplied by its own x-difference,
    which turns it into the homogeneous coordinates of the line; the result
    is then multiplied once more by the product of the three x-differences so
    that a vertical line forces a zero.  Zero iff A, B, C share a point or one
    of them is vertical.
    """
    _require_admissible(T)
    a1, a2, b1, b2, c1, c2 = T
    return Fraction(concurrency_poly_xy(a1.x, a1.y, a2.x, a2.y, b1.x, b1.y, b2.x, b2.y,
                                        c1.x, c1.y, c2.x, c2.y))


# --- segment helpers used by the representation and arrangement layers ---

def on_closed_segment(p: Point, a: Point, b: Point) -> bool:
    if orientation(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def on_open_segment(p: Point, a: Point, b: Point) -> bool:
    return p != a and p != b and on_closed_segment(p, a, b)


def segments_intersect_closed(a: Point, b: Point, c: Point, d: Point) -> bool:
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (on_closed_segment(c, a, b) or on_closed_segment(d, a, b)
            or on_closed_segment(a, c, d) or on_closed_segment(b, c, d))


def proper_crossing(a: Point, b: Point, c: Point, d: Point):
    """Crossing point of segments ab and cd if they cross at a single interior point of both."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return line_intersection(DirectedLine(a, b), DirectedLine(c, d))
    return None


def segment_params(a: Point, b: Point, c: Point, d: Point) -> list[Fraction]:
    """Parameters t in [0, 1] along a + t(b - a) where the closed segment cd touches it.

    A collinear overlap contributes the parameters of its two ends.
    """
    dx, dy = b.x - a.x, b.y - a.y
    ex, ey = d.x - c.x, d.y - c.y
    den = cross(dx, dy, ex, ey)
    if den == 0:
        if orientation(a, b, c) != 0:
            return []
        dd = dx * dx + dy * dy
        tc = Fraction((c.x - a.x) * dx + (c.y - a.y) * dy) / dd
        td = Fraction((d.x - a.x) * dx + (d.y - a.y) * dy) / dd
        lo, hi = max(min(tc, td), 0), min(max(tc, td), 1)
        if lo > hi:
            return []
        return [lo] if lo == hi else [lo, hi]
    wx, wy = c.x - a.x, c.y - a.y
    t = Fraction(cross(wx, wy, ex, ey)) / den
    u = Fraction(cross(wx, wy, dx, dy)) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return [t]
    return []


def lerp(a: Point, b: Point, t: Fraction) -> Point:
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def signed_area2(pts) -> Fraction:
    """Twice the signed area of a closed polygon given by its vertex list."""
    s = Fraction(0)
    m = len(pts)
    for i in range(m):
        p, q = pts[i], pts[(i + 1) % m]
        s += p.x * q.y - q.x * p.y
    return s


def point_in_polygon(q: Point, pts) -> int:
    """+1 strictly inside, 0 on the boundary, -1 outside.

    Works for weakly simple polygons (repeated vertices, doubled edges) as
    long as the query is off the boundary.
    """
    m = len(pts)
    inside = False
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if on_closed_segment(q, a, b):
            return 0
        if (a.y > q.y) != (b.y > q.y):
            # x coordinate of the edge at height q.y compared exactly
            lhs = (q.x - a.x) * (b.y - a.y)
            rhs = (b.x - a.x) * (q.y - a.y)
            if (b.y > a.y and lhs < rhs) or (b.y < a.y and lhs > rhs):
                inside = not inside
    return 1 if inside else -1
