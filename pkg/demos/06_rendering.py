"""Render an optimal uncrossed collection of K5 to SVG files.

Each drawing becomes one SVG: thick dark edges are the uncrossed ones,
thin gray edges carry the crossings, and every crossing point gets a small
red marker.  Output bytes are deterministic.
"""

from pathlib import Path

from uncrossed import uncrossed_crossing_number
from uncrossed.instances import complete
from uncrossed.render import render_collection

k5 = complete(5)
res = uncrossed_crossing_number(k5)
out = Path("out_svg_k5")
paths = render_collection(k5, res.witness, out)
print(f"ucr(K5) = {res.ucr} with {res.ounc} drawings; wrote:")
for p in paths:
    print("  ", p)
print("open them in any browser; rerunning reproduces identical bytes")
