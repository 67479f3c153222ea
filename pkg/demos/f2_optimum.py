"""Doubly truncated {u,v,u} orthoschemes: where the loosest covering sits.

The two truncating planes are exchanged by a half-turn, so the packing
height is the smaller of two distances to the plane a_3.
"""

from hyperball import SchlafliSymbol, optimize, packing_candidates
from hyperball.density import admissible_symbols
from hyperball.golden import adjudicate_f2_covering

for sym in (SchlafliSymbol(7, 3, 7), SchlafliSymbol(4, 6, 4)):
    cand = packing_candidates("F2", sym)
    print(sym, {k: round(v, 5) for k, v in cand.items()})

print("\nadmissible F2 symbols with parameters <= 10:")
print(" ".join(f"{{{s}}}" for s in admissible_symbols("F2", 10)))

sym, rep = optimize("F2", "pack", 10)
print(f"\ndensest packing:   {{{sym}}} delta = {rep.density:.5f}")
sym, rep = optimize("F2", "cover", 10)
print(f"loosest covering:  {{{sym}}} Delta = {rep.density:.5f}")
print(adjudicate_f2_covering(rep.density))
