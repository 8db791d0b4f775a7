"""Minimum obstacles for a fixed drawing, and a search over drawings.

The fixed-embedding minimum is a hitting set over faces.  Searching random
simple embeddings gives an upper bound on the obstacle number.
"""
import numpy as np

from obsnum import (
    Graph, SearchConfig, min_obstacles_fixed, obstacle_number_search,
    random_simple_embedding, slab_report, verify,
)

grid = Graph.grid(2, 3)
rng = np.random.default_rng(0)
emb = random_simple_embedding(6, rng)
res = min_obstacles_fixed(grid, emb)
print(f"2x3 grid, one random drawing: {res.count} face obstacles {res.faces}, "
      f"certificate valid: {verify(res.certificate).valid}")
clusters = min_obstacles_fixed(grid, emb, "vertex_clusters")
print(f"allowing obstacles to pass through vertices: {clusters.count}")

out = obstacle_number_search(grid, SearchConfig(budget=1000, seed=1))
print(f"search: best {out.best.count} after {out.samples} samples; trace {out.trace}")

# Slabs of consecutive x-sorted vertices never need more than the whole drawing.
G = Graph(8, frozenset((u, w) for u in range(1, 9) for w in range(u + 1, 9) if (u * w) % 3))
emb8 = random_simple_embedding(8, rng)
rep = slab_report(G, emb8, 4)
print("whole:", rep.whole_minimum, "slabs:", [s.minimum for s in rep.slabs])
