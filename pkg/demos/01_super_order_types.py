"""Super-order types: what they record and when they vanish.

A sextuple of points (a1, a2, b1, b2, c1, c2) describes three lines.  Its
type says in which order line A meets lines B and C.  Collecting the types of
every admissible index sextuple gives the super-order type of a sequence.
"""
from obsnum import enumerate_admissible, is_simple, order_type, pstar_sign, super_order_type
from obsnum.geometry import Point, point

# Four points in convex position, no vertical or parallel lines.
P = [point(0, 0), point(5, 1), point(7, 6), point(1, 4)]
sot = super_order_type(P)
print(f"n=4 has r={sot.r} admissible sextuples; simple: {sot.is_simple()}")
print("first ten entries:", sot.values[:10])

# Translating and scaling change nothing: the types are affine invariants.
moved = [Point(p.x * 3 + 10, p.y * 3 - 2) for p in P]
print("translate+scale keeps sigma:", super_order_type(moved) == sot)

# A mirror image keeps sigma too, yet flips every orientation triple.
mirror = [Point(-p.x, p.y) for p in P]
print("mirror keeps sigma:", super_order_type(mirror) == sot)
print("order types:", order_type(P).values, "vs", order_type(mirror).values)

# Degenerate inputs produce zeros, and the polynomial sign agrees.
collinear = [point(0, 0), point(1, 1), point(2, 2), point(5, -3)]
print("collinear triple simple?", is_simple(collinear), "P* sign:", pstar_sign(collinear))
print("P* sign of the convex quadrilateral:", pstar_sign(P))

print("r(n) for n = 3..8:", [len(enumerate_admissible(n)) for n in range(3, 9)])
