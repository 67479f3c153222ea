"""Conway orbifold symbols of vertex-stabilizer plane groups.

Every character of a symbol is one feature: a digit or a parameter letter
is a rotation order, ``*`` opens a mirror boundary whose following orders
are corners, ``x`` is a cross-cap and ``o`` a handle.  Orders are one
character each, so ``*2v2w`` has corners ``2, v, 2, w``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import MissingParameter

_RESERVED = set("*xo")


@dataclass(frozen=True)
class OrbifoldSymbol:
    handles: int = 0
    cross_caps: int = 0
    cone_orders: tuple = ()
    boundary_components: tuple = ()  # tuple of corner-order tuples

    @classmethod
    def parse(cls, text: str, values: dict | None = None) -> "OrbifoldSymbol":
        """Parse a symbol, substituting parameter letters from ``values``."""
        values = values or {}
        handles = crosses = 0
        cones: list = []
        boundaries: list = []
        current = None
        for ch in text.replace("×", "x").replace(" ", ""):
            if ch == "*":
                current = []
                boundaries.append(current)
            elif ch == "x":
                crosses += 1
                current = None
            elif ch == "o":
                handles += 1
                current = None
            else:
                order = _order(ch, values)
                (cones if current is None else current).append(order)
        return cls(handles, crosses, tuple(cones), tuple(tuple(b) for b in boundaries))

    def __str__(self):
        out = "o" * self.handles + "".join(str(n) for n in self.cone_orders)
        for b in self.boundary_components:
            out += "*" + "".join(str(m) for m in b)
        return out + "x" * self.cross_caps


def _order(ch: str, values: dict) -> int:
    if ch.isdigit():
        return int(ch)
    if not ch.isalpha() or ch in _RESERVED:
        raise ValueError(f"bad orbifold symbol character {ch!r}")
    try:
        return int(values[ch])
    except KeyError:
        raise MissingParameter(f"orbifold parameter {ch!r} is not assigned") from None


def parameters(text: str) -> frozenset:
    """Parameter letters used by a symbol template."""
    return frozenset(ch for ch in text if ch.isalpha() and ch not in _RESERVED)


def _cost(n: int) -> Fraction:
    return 1 - Fraction(1, n)


def orbifold_chi(sym: OrbifoldSymbol) -> Fraction:
    """Orbifold Euler characteristic, exact.

    Examples
    --------
    >>> orbifold_chi(OrbifoldSymbol.parse("*23u", {"u": 7}))
    Fraction(-1, 84)
    """
    chi = Fraction(2 - 2 * sym.handles - sym.cross_caps)
    chi -= sum((_cost(n) for n in sym.cone_orders), Fraction(0))
    for corners in sym.boundary_components:
        chi -= 1 + sum((_cost(m) for m in corners), Fraction(0)) / 2
    return chi


def geometry(sym: OrbifoldSymbol) -> str:
    chi = orbifold_chi(sym)
    if chi > 0:
        return "Spherical"
    if chi == 0:
        return "Euclidean"
    return "Hyperbolic"


def area_over_pi(sym: OrbifoldSymbol) -> Fraction:
    """Hyperbolic area divided by pi, ``-2 chi``; only for negative chi."""
    chi = orbifold_chi(sym)
    if chi >= 0:
        raise ValueError(f"{sym} is not hyperbolic (chi = {chi})")
    return -2 * chi


def area(sym: OrbifoldSymbol) -> float:
    return math.pi * float(area_over_pi(sym))
