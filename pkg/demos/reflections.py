"""Reflection matrices of a truncated orthoscheme satisfy their relators.

In coordinates where the Gram matrix is the form, the face reflections and
the reflection in the polar plane of an outer vertex are explicit 4x4
matrices, so the Coxeter relations can be checked numerically.
"""

import numpy as np

from hyperball import SchlafliSymbol, build_gram, polar_reflection, reflection, verify_relator
from hyperball.catalog import find_series, smallest_admissible
from hyperball.isometry import check_orthoscheme, verify_series

g = build_gram(SchlafliSymbol(3, 3, 7))
m2, m3, a0 = reflection(2, g), reflection(3, g), polar_reflection(0, g)
np.set_printoptions(precision=4, suppress=True)
print("polar reflection a0:\n", a0.matrix)
print("form defect:", a0.form_defect())

gens = {"m2": m2, "m3": m3}
for k in (5, 6, 7):
    print(f"(m2 m3)^{k} residual: {verify_relator((('m2', 1), ('m3', 1)), k, gens):.2e}")

for r in check_orthoscheme(SchlafliSymbol(7, 3, 7), with_polar=True)[-6:]:
    print(f"{{7,3,7}} {r.relation:12s} {r.residual:.1e}")

for sid in ("*33G", "*22G1"):
    s = find_series(sid)
    vals = smallest_admissible(s)
    res = verify_series(s, vals)
    print(f"{sid} {vals}: {len(res)} relators, max residual {max(r.residual for r in res):.1e}")
