"""Graphs, subdivision, weight expansion, and the planarity oracle.

Every solver in this package ultimately leans on fast planarity decisions
plus combinatorial embeddings (rotation systems and their faces).
"""

from uncrossed import (
    enumerate_embeddings,
    expand_weights,
    graph_from_edges,
    is_outerplanar,
    is_planar,
    subdivide,
)
from uncrossed.instances import complete, complete_bipartite

k4 = complete(4)
k5 = complete(5)
k33 = complete_bipartite(3, 3)

print("K4 planar?", is_planar(k4).planar)
res = is_planar(k5)
print("K5 planar?", res.planar)
print("  Kuratowski witness (edge ids):", sorted(res.kuratowski))

emb = is_planar(k4).embedding
print("K4 embedding has", len(emb.faces), "faces:")
for f in emb.faces:
    print("   face", f.id, "vertices", sorted(f.vertices))

print("cycle C5 outerplanar?", is_outerplanar(graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)])))
print("K4 outerplanar?", is_outerplanar(k4))

# subdividing each edge once doubles the edge count and keeps planarity
sub = subdivide(k5, 1)
print("K5 subdivided once:", sub.n, "vertices,", sub.m, "edges, planar?", is_planar(sub).planar)

# a weight-3 edge behaves like three parallel unit edges
heavy = graph_from_edges(2, [(0, 1)], [3])
flat, origin = expand_weights(heavy)
print("weight-3 edge expands to", flat.m, "unit edges, origins", origin)

# small planar graphs have a handful of embeddings up to reflection
tri = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])
print("triangle embeddings:", len(list(enumerate_embeddings(tri))))
two = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
print("two disjoint triangles:", len(list(enumerate_embeddings(two))),
      "(side by side x2 orientations, nested x4)")
