# Building balanced hypercubes and poking at their structure.
#
# Run with:  python demos/01_topology.py

from bhconn import build, subcube
from bhconn.topology import cross_edges

# BH_1 is a 4-cycle 0-1-2-3-0
g1 = build(1)
print("BH_1 edges:", g1.edges())

# BH_2: 16 vertices, every vertex has 2n = 4 neighbors tagged by (dimension, sign)
g = build(2)
print(g.num_vertices, "vertices,", g.num_edges, "edges")
for coords, dim, sign in g.neighbors((1, 0)):
    print(f"  (1,0) --dim {dim}{sign}--> {coords}")

# flipping the inner index by 2 gives a vertex with the same neighborhood
print("twin of (0,0):", g.twin((0, 0)))
print("common neighbors of (0,0),(2,0):", sorted(g.common_neighbors((0, 0), (2, 0))))
print("common neighbors of (0,0),(0,1):", sorted(g.common_neighbors((0, 0), (0, 1))))

# BH_3 splits along the last coordinate into four copies of BH_2, joined in a ring
g3 = build(3)
for k in range(4):
    sc = subcube(g3, k)
    print(f"subcube {k}: {len(sc.vertices)} vertices, same edges as BH_2:", sc.relabeled_edges() == g.edges())
pairs = sorted({(a, b) for *_, a, b in cross_edges(g3)})
print("subcube pairs joined by dimension-2 edges:", pairs)

# exports
print(g1.to_json())
print(g1.to_dot())
