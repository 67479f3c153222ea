"""Volume of a complete hyperbolic orthoscheme (curvature -1)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivisionByZero, NotRealizable
from .lobachevsky import lob
from .schlafli import SchlafliSymbol


@dataclass(frozen=True)
class VolumeBreakdown:
    sym: SchlafliSymbol
    theta: float
    terms: tuple  # seven signed Lobachevsky terms
    volume: float


def theta(sym: SchlafliSymbol) -> float:
    """Auxiliary angle in ``(0, pi/2)`` of the volume formula."""
    b01, b12, b23 = sym.angles
    radicand = math.cos(b12) ** 2 - math.sin(b01) ** 2 * math.sin(b23) ** 2
    if radicand <= 0.0:
        raise NotRealizable(f"{{{sym}}} is not a hyperbolic orthoscheme (radicand {radicand:.3e})")
    if sym.u_bar == 2 or sym.w_bar == 2:
        raise DivisionByZero(f"{{{sym}}} has a right essential angle; theta would be pi/2")
    return math.atan(math.sqrt(radicand) / (math.cos(b01) * math.cos(b23)))


def orthoscheme_volume(sym: SchlafliSymbol) -> VolumeBreakdown:
    b01, b12, b23 = sym.angles
    t = theta(sym)
    half = math.pi / 2
    terms = (
        lob(b01 + t),
        -lob(b01 - t),
        lob(half + b12 - t),
        lob(half - b12 - t),
        lob(b23 + t),
        -lob(b23 - t),
        2.0 * lob(half - t),
    )
    return VolumeBreakdown(sym, t, terms, 0.25 * math.fsum(terms))


def volume(sym: SchlafliSymbol) -> float:
    return orthoscheme_volume(sym).volume
