"""Crossing numbers versus uncrossed collections on K5.

A single drawing of K5 needs one crossing, but then two edges stay crossed
forever.  An uncrossed collection fixes that: every edge must be drawn
crossing-free in at least one member.  The cheapest such collection for K5
uses two drawings with one crossing each.
"""

from uncrossed import (
    crossing_number,
    decide_uncrossed_cost,
    planarize,
    realizable_uncrossed_set,
    uncrossed_crossing_number,
    uncrossed_number,
    verify_collection,
)
from uncrossed.instances import complete
from uncrossed.planarity import graph_planar

k5 = complete(5)

cr = crossing_number(k5)
print("cr(K5) =", cr.value)
print("  witness crosses:", [ev.pair() for ev in cr.witness.crossings])
print("  planarization planar?", graph_planar(planarize(k5, cr.witness)))

res = uncrossed_crossing_number(k5)
print("ucr(K5) =", res.ucr, " attained with", res.ounc, "drawings")
for i, d in enumerate(res.witness.drawings):
    print(f"  drawing {i}: crossings {[ev.pair() for ev in d.crossings]}, "
          f"uncrossed {sorted(d.uncrossed_edges(k5))}")
print("  verifier says:", verify_collection(k5, res.witness).accepted)

print("Ucr_1(K5) <= 9 ?", decide_uncrossed_cost(k5, 1, 9).verdict,
      "(one drawing can never leave every K5 edge uncrossed)")
print("Ucr_2(K5) <= 1 ?", decide_uncrossed_cost(k5, 2, 1).verdict)
print("Ucr_2(K5) <= 2 ?", decide_uncrossed_cost(k5, 2, 2).verdict)

unc = uncrossed_number(k5)
print("unc(K5) =", unc.value, " cover sizes", [len(c.edge_subset) for c in unc.certificates])

# which edge sets can a single drawing leave uncrossed?
print("all of K5:", realizable_uncrossed_set(k5, range(10), want_certificate=False).status)
print("K5 minus one edge:", realizable_uncrossed_set(k5, range(1, 10), want_certificate=False).status)
print("K5 minus two disjoint edges:",
      realizable_uncrossed_set(k5, [e for e in range(10) if e not in (0, 7)],
                               want_certificate=False).status)
