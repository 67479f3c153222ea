"""Hyperball packings and coverings of the simply truncated {3,3,u} orthoschemes.

Walks one symbol through the pipeline (Gram matrix, co-metric, volume,
height, density), then sweeps u to see the packing density peak at u = 7.
"""

import numpy as np

from hyperball import (
    SchlafliSymbol,
    build_gram,
    classify_vertices,
    covering_density,
    invert_gram,
    packing_density,
    truncation_area,
)

sym = SchlafliSymbol(3, 3, 7)
g = build_gram(sym)
c = invert_gram(g)
np.set_printoptions(precision=5, suppress=True)
print("Gram matrix of {3,3,7}:\n", g.entries)
print("determinant:", round(g.determinant, 5))
print("vertex classes:", [v.value for v in classify_vertices(c)])

# A_0 is outer: its polar plane cuts off a triangle with angles pi/2, pi/3, pi/7
area = truncation_area(sym, 0)
print(f"truncation triangle area = pi * {area.area_over_pi} = {area.area:.5f}")

pack = packing_density("F1", sym)
cover = covering_density("F1", sym)
print(f"packing:  h = {pack.height:.5f}, density = {pack.density:.5f}")
print(f"covering: h = {cover.height:.5f}, density = {cover.density:.5f}")

# the packing density falls off monotonically once u passes 7
print("\n  u   delta     Delta")
for u in (7, 8, 9, 10, 12, 15, 20, 30, 50, 100, float("inf")):
    s = SchlafliSymbol(3, 3, u)
    print(f"{u:>4} {packing_density('F1', s).density:.5f}  {covering_density('F1', s).density:.5f}")
