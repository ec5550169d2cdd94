"""Hexagonal grids with ring certificates, and tiles with corner order.

Grids support the irrelevant-edge step: inside a wall of at least 4k+4
nested rings, an innermost-cycle edge can be deleted without changing
whether the collection cost stays below k.  Tiles pin four corners to the
unit square; swapping the last two corners (inversion) can force crossings,
which the doubled-tile gadget translates into collection cost.
"""

from uncrossed import decide_uncrossed_cost
from uncrossed.core import WeightedMultigraph, graph_from_edges
from uncrossed.instances import (
    Tile,
    delete_innermost_edge,
    doubled_tile_gadget,
    hex_grid,
    invert_tile,
    is_hexagonal_grid,
    principal_rings,
    tile_crossing_number,
)

g, cert = hex_grid(4)
print("hex grid r=4:", g.n, "vertices,", g.m, "edges")
print("  ring lengths:", [len(r) for r in cert.rings])
print("  structural check:", is_hexagonal_grid(g, cert))
smaller, note = delete_innermost_edge(g, cert, 0)
print("  deleted innermost edge", note.removed_edge, "->", smaller.m, "edges")

g8, cert8 = hex_grid(8)
rings = principal_rings(g8, cert8, 1)
print("r=8, k=1 principal rings:", [(r.index, len(r.vertices)) for r in rings])

print()
# a tile with three corner-to-corner paths; inverting it forces 2 crossings
chain = Tile(
    graph_from_edges(7, [(0, 4), (4, 2), (0, 5), (5, 2), (0, 6), (6, 2),
                         (4, 5), (5, 6), (1, 6), (3, 4)]),
    (0, 1, 2, 3),
)
print("chain tile: tcr =", tile_crossing_number(chain).value,
      " inverted:", tile_crossing_number(invert_tile(chain)).value)
gadget, info = doubled_tile_gadget(chain, 1)
print("  gadget:", gadget.n, "vertices; 2 drawings with cost <=",
      info.cost_target, "?", decide_uncrossed_cost(gadget, 2, info.cost_target).verdict)

# doubling one path makes the inverted tile cost exactly 1
doubled = Tile(
    WeightedMultigraph(6, ((0, 4, 2), (2, 4, 2), (0, 5, 1), (2, 5, 1),
                           (4, 5, 1), (1, 5, 1), (3, 4, 1))),
    (0, 1, 2, 3),
)
print("doubled-path tile: tcr =", tile_crossing_number(doubled).value,
      " inverted:", tile_crossing_number(invert_tile(doubled)).value)
gadget, info = doubled_tile_gadget(doubled, 1)
print("  gadget: 2 drawings with cost <=", info.cost_target, "?",
      decide_uncrossed_cost(gadget, 2, info.cost_target).verdict)
