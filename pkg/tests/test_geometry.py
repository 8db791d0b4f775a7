from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from obsnum.geometry import (
    IDENTICAL,
    PARALLEL,
    DirectedLine,
    Point,
    Sextuple,
    concurrency_poly,
    is_admissible,
    is_degenerate,
    line_intersection,
    orientation,
    parallel_poly,
    point,
    sextuple_type,
)

from conftest import points, random_points


def P(x, y):
    return point(x, y)


def det3(rows):
    # Leibniz expansion, independent of the cross-product formula under test
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * e * i + b * f * g + c * d * h - c * e * g - b * d * i - a * f * h


def sgn(v):
    return (v > 0) - (v < 0)


def test_orientation_trivial_cases():
    assert orientation(P(0, 0), P(1, 0), P(2, 0)) == 0
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(0, 1), P(1, 0)) == -1


def test_orientation_matches_determinant(rng):
    for _ in range(100):
        p, q, r = random_points(rng, 3)
        expected = sgn(det3([[p.x, p.y, 1], [q.x, q.y, 1], [r.x, r.y, 1]]))
        assert orientation(p, q, r) == expected


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(p, r, q)


def test_line_intersection_examples():
    x_axis = DirectedLine(P(0, 0), P(1, 0))
    assert line_intersection(x_axis, DirectedLine(P(0, 0), P(0, 1))) == P(0, 0)
    assert line_intersection(x_axis, DirectedLine(P(0, 1), P(1, 1))) is PARALLEL
    assert line_intersection(x_axis, DirectedLine(P(5, 0), P(-2, 0))) is IDENTICAL
    # y = 2x - 5 meets y = 0 at x = 5/2
    assert line_intersection(x_axis, DirectedLine(P(2, -1), P(3, 1))) == P(F(5, 2), 0)


def test_admissibility():
    a, b = P(0, 0), P(1, 1)
    c = (P(3, 4), P(5, 6))
    assert not is_admissible(Sextuple(a, b, a, b, *c))
    assert not is_admissible(Sextuple(b, a, a, b, *c))   # same unordered pair
    assert not is_admissible(Sextuple(a, a, P(2, 0), P(3, 1), *c))
    p, q, r = P(0, 0), P(4, 1), P(1, 5)
    # pairwise intersections are non-empty but the triple one is empty
    assert is_admissible(Sextuple(p, q, q, r, r, p))
    # all three pairs share p
    assert not is_admissible(Sextuple(p, q, p, r, p, P(7, 7)))


def test_degeneracy_examples():
    A = (P(0, 0), P(1, 0))
    B = (P(2, -1), P(3, 1))
    assert is_degenerate(Sextuple(*A, *B, P(4, 0), P(4, 1)))        # vertical C
    assert is_degenerate(Sextuple(*A, P(0, 1), P(1, 1), *B))        # A parallel to B
    # x-axis, y = x, y = -x all pass through the origin
    assert is_degenerate(Sextuple(P(-1, 0), P(1, 0), P(-1, -1), P(2, 2), P(-3, 3), P(1, -1)))
    assert not is_degenerate(Sextuple(*A, *B, P(4, 1), P(5, -1)))


def test_b_parallel_c_alone_is_not_degenerate():
    T = Sextuple(P(0, 0), P(1, 0), P(0, 1), P(1, 3), P(5, 1), P(6, 3))
    assert not is_degenerate(T)
    assert sextuple_type(T) != 0


def test_sextuple_type_examples():
    A = (P(0, 0), P(1, 0))
    B = (P(2, -1), P(3, 1))      # meets A at x = 5/2
    C = (P(4, 1), P(5, -1))      # meets A at x = 9/2
    assert sextuple_type(Sextuple(*A, *B, *C)) == -1
    assert sextuple_type(Sextuple(*A, *C, *B)) == 1
    assert sextuple_type(Sextuple(*A, *B, P(4, 0), P(4, 1))) == 0


def test_non_admissible_rejected():
    a, b = P(0, 0), P(1, 1)
    T = Sextuple(a, b, a, b, P(3, 4), P(5, 6))
    with pytest.raises(ValueError):
        sextuple_type(T)
    with pytest.raises(ValueError):
        is_degenerate(T)
    with pytest.raises(ValueError):
        concurrency_poly(T)
    with pytest.raises(ValueError):
        parallel_poly(a, a, b, P(2, 2))


def test_parallel_poly_values():
    assert parallel_poly(P(0, 0), P(1, 0), P(3, 2), P(7, 2)) == 0
    # x(a1-a2)*y(b1-b2) - x(b1-b2)*y(a1-a2) = (-1)(-1) - 0*0
    assert parallel_poly(P(0, 0), P(1, 0), P(0, 0), P(0, 1)) == 1
    assert parallel_poly(P(0, 0), P(0, 1), P(5, 2), P(5, 9)) == 0   # two verticals


def test_parallel_poly_agrees_with_line_intersection(rng):
    hits = 0
    for _ in range(1000):
        a1, a2, b1, b2 = random_points(rng, 4, lo=-3, hi=4, max_den=1)
        zero = parallel_poly(a1, a2, b1, b2) == 0
        kind = line_intersection(DirectedLine(a1, a2), DirectedLine(b1, b2))
        assert zero == (not isinstance(kind, Point))
        hits += zero
    assert hits > 0   # the small grid actually produces parallel pairs


def test_concurrency_poly_zero_cases():
    A = (P(0, 0), P(1, 0))
    B = (P(2, -1), P(3, 1))
    assert concurrency_poly(Sextuple(*A, *B, P(4, 0), P(4, 1))) == 0
    assert concurrency_poly(Sextuple(P(-1, 0), P(1, 0), P(-1, -1), P(2, 2), P(-3, 3), P(1, -1))) == 0


def _unscaled_det(T):
    rows = []
    for p, q in ((T.a1, T.a2), (T.b1, T.b2), (T.c1, T.c2)):
        slope = F(p.y - q.y) / (p.x - q.x)
        rows.append([p.y - p.x * slope, slope, 1])
    return det3(rows)


def test_concurrency_poly_sign_matches_unscaled_determinant(rng):
    for _ in range(300):
        T = Sextuple(*random_points(rng, 6))
        assume_ok = all(p.x != q.x for p, q in ((T.a1, T.a2), (T.b1, T.b2), (T.c1, T.c2)))
        if not assume_ok:
            continue
        assert sgn(concurrency_poly(T)) == sgn(_unscaled_det(T))
        assert concurrency_poly(T) != 0


def _factor_product(T):
    return (parallel_poly(T.a1, T.a2, T.b1, T.b2) * parallel_poly(T.a1, T.a2, T.c1, T.c2)
            * concurrency_poly(T))


@given(points, points, points, points, points, points)
def test_type_zero_iff_polynomials_vanish(a1, a2, b1, b2, c1, c2):
    T = Sextuple(a1, a2, b1, b2, c1, c2)
    assume(is_admissible(T))
    assert (sextuple_type(T) == 0) == (_factor_product(T) == 0) == is_degenerate(T)


@given(points, points, points, points, points, points)
def test_type_symmetries(a1, a2, b1, b2, c1, c2):
    T = Sextuple(a1, a2, b1, b2, c1, c2)
    assume(is_admissible(T))
    s = sextuple_type(T)
    assert sextuple_type(Sextuple(a2, a1, b1, b2, c1, c2)) == -s
    assert sextuple_type(Sextuple(a1, a2, b2, b1, c1, c2)) == s
    assert sextuple_type(Sextuple(a1, a2, b1, b2, c2, c1)) == s
    assert sextuple_type(Sextuple(a1, a2, c1, c2, b1, b2)) == -s


@given(points, points, points, points, points, points, points, points)
def test_type_invariant_under_translation_and_scaling(a1, a2, b1, b2, c1, c2, shift, sc):
    T = Sextuple(a1, a2, b1, b2, c1, c2)
    assume(is_admissible(T))
    k = abs(sc.x) + 1
    moved = Sextuple(*[Point((p.x + shift.x) * k, (p.y + shift.y) * k) for p in T])
    assert sextuple_type(moved) == sextuple_type(T)
    assert is_degenerate(moved) == is_degenerate(T)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        point(0.1, 2)
