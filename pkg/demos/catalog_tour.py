"""The 73 extended space groups as data: counts, stabilizers and optima.

Each series carries its parameter inequalities.  The vertex-stabilizer
orbifolds must be hyperbolic exactly when those inequalities hold, which
is checked here by orbifold Euler characteristic.
"""

from hyperball.catalog import (
    OrbifoldSymbol,
    family_counts,
    find_series,
    load_catalog,
    orbifold_chi,
    series_optimal_density,
    smallest_admissible,
    underlying_schlafli,
)

series = load_catalog()
print("extensions per family:", family_counts(series))

s = find_series("*233G")
for u in (5, 6, 7):
    sym = OrbifoldSymbol.parse(s.stabilizers[0][1], {"u": u})
    print(f"*233G u={u}: stabilizer {sym} has chi = {orbifold_chi(sym)}")

print("\nsmallest admissible parameters and best packing per series:")
for s in series:
    if s.fundamental:
        continue
    vals = smallest_admissible(s)
    best, rep = series_optimal_density(s, "pack", max_param=12)
    print(f"{s.family} {s.id:7s} first {{{underlying_schlafli(s, vals)}}}  best {{{rep.sym}}} {rep.density:.5f}")
