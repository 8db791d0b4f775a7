"""Moving points into simple position without losing what already holds.

Every nonzero sextuple type is kept, the number of zeros strictly drops at
each accepted step, and with obstacles present the visible pairs stay fixed.
"""
from obsnum import Graph, PointObstacle, perturb_to_simple, super_order_type, visibility_graph
from obsnum.geometry import point
from obsnum.representation import Embedding

pts = [point(0, 0), point(4, 0), point(8, 0), point(4, 6), point(1, 9)]
before = super_order_type(pts)
print("zeros before:", before.zeros())

after_pts = perturb_to_simple(pts, seed=3)
after = super_order_type(after_pts)
print("zeros after:", after.zeros())
print("nonzero types kept:", all(b in (0, a) for b, a in zip(before.values, after.values)))
print("moved points:", after_pts)

G = Graph(5, frozenset({(1, 4), (2, 4), (3, 4), (4, 5), (1, 5)}))
obstacles = [PointObstacle(point(2, 1)), PointObstacle(point(6, 1))]
seen = visibility_graph(Embedding(tuple(pts)), obstacles)
moved = perturb_to_simple(pts, graph=G, obstacles=obstacles, seed=1)
print("visibility unchanged with obstacles:",
      visibility_graph(Embedding(tuple(moved)), obstacles) == seen)
