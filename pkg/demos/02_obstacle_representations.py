"""Checking obstacle representations.

A graph is represented when the drawn edges are exactly the vertex pairs
whose segment avoids every obstacle.
"""
from obsnum import (
    Embedding, Graph, ObstacleRepresentation, PointObstacle, PolygonObstacle,
    intersect_edges, midpoint_representation, per_obstacle_decomposition, verify,
)
from obsnum.geometry import directed_line, line_intersection, point

C4 = Graph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
quad = Embedding((point(0, 0), point(5, 1), point(7, 6), point(1, 4)))

bare = verify(ObstacleRepresentation(C4, quad))
print("no obstacles:", bare.valid, [(p.u, p.w, p.violation) for p in bare.violations])

# A small triangle where the diagonals cross blocks both non-edges at once.
tri = PolygonObstacle((point(3, 2), point(4, 3), point(3, 3)))
rep = ObstacleRepresentation(C4, quad, (tri,))
print("one polygon:", verify(rep).valid)

# The midpoint construction always works in general position, one point per non-edge.
mid = midpoint_representation(C4, quad)
print("midpoints:", [o.at for o in mid.obstacles], "valid:", verify(mid).valid)

# Each obstacle alone sees a supergraph of C4; together they cut it down exactly.
parts = per_obstacle_decomposition(mid)
print("per-obstacle edge counts:", [len(g.edges) for g in parts],
      "intersection == E(C4):", intersect_edges(parts) == C4.edges)

# One point suffices if it sits exactly where the two diagonals cross.
x = line_intersection(directed_line(quad(1), quad(3)), directed_line(quad(2), quad(4)))
print("single point at", x, "valid:", verify(ObstacleRepresentation(C4, quad, (PointObstacle(x),))).valid)
