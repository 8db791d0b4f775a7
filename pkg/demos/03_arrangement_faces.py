"""Planarizing a straight-line drawing and walking its faces.

Every crossing becomes a node; faces of the resulting plane graph are the
candidate obstacles.  A non-edge is blocked by a face iff its open segment
passes through that face.
"""
from obsnum import Embedding, Graph, coverage_matrix, planarize
from obsnum.geometry import point

K4 = Graph.complete(4)
quad = Embedding((point(0, 0), point(5, 1), point(7, 6), point(1, 4)))
arr = planarize(K4, quad)
print(f"K4: {len(arr.nodes)} nodes ({arr.crossings} crossing), {len(arr.arcs)} arcs, "
      f"{len(arr.faces)} faces, Euler ok: {arr.euler_ok()}")
for f in arr.faces:
    kind = "bounded" if f.bounded else "outer"
    print(f"  face {f.id} ({kind}) witness {f.witness} -> locate {arr.locate(f.witness)}")

# Drop one diagonal: it becomes a non-edge crossing two triangles.
G = Graph(4, K4.edges - {(2, 4)})
arr = planarize(G, quad)
cov = coverage_matrix(arr)
for (u, w), seq in zip(cov.rows, cov.sequences):
    print(f"non-edge {u}-{w} passes through faces {seq}")
