"""Congruent hyperball packings and coverings of trunc-orthoscheme tilings.

A hyperball of height ``h`` around the truncating plane of an outer vertex
meets the trunc-orthoscheme in a piece over the truncation triangle.  Its
volume follows the Bolyai formula, and the density is the ratio of the
piece volumes to the orthoscheme volume.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .catalog.expr import Constraint
from .errors import EmptyAdmissibleSet, NegativeHeight, VertexNotTruncated
from .metric import (
    Family,
    TruncOrthoscheme,
    covering_height,
    packing_height,
)
from .schlafli import (
    INF,
    Realizability,
    SchlafliSymbol,
    VertexClass,
    realizability,
    reciprocal,
)
from .volume import volume


class Mode(Enum):
    PACKING = "Packing"
    COVERING = "Covering"

    @classmethod
    def parse(cls, text) -> "Mode":
        if isinstance(text, Mode):
            return text
        key = str(text).strip().lower()
        if key in ("pack", "packing", "p"):
            return cls.PACKING
        if key in ("cover", "covering", "c"):
            return cls.COVERING
        raise ValueError(f"unknown mode {text!r}")


@dataclass(frozen=True)
class TruncationArea:
    vertex_index: int
    area: float
    area_over_pi: Fraction


@dataclass(frozen=True)
class DensityReport:
    family: Family
    sym: SchlafliSymbol
    mode: Mode
    height: float
    piece_volumes: tuple  # ((vertex_index, volume), ...)
    orthoscheme_volume: float
    density: float

    @property
    def pieces_volume(self) -> float:
        return math.fsum(v for _, v in self.piece_volumes)


def truncation_area(sym: SchlafliSymbol, vertex: int) -> TruncationArea:
    """Area of the triangle cut from the orthoscheme by a truncating plane.

    The triangle has angles ``pi/2`` and the two essential angles along the
    edges through the truncated vertex, so its area is the angle defect.
    """
    if vertex not in (0, 3):
        raise VertexNotTruncated(f"only A_0 and A_3 can be truncated, got A_{vertex}")
    t = TruncOrthoscheme.from_symbol(sym)
    t.truncation_pole(vertex)
    u, v, w = sym.params
    far = (v, w) if vertex == 0 else (u, v)
    q = Fraction(1, 2) - reciprocal(far[0]) - reciprocal(far[1])
    return TruncationArea(vertex, math.pi * float(q), q)


def half_hyperball_volume(area: float, h: float) -> float:
    """Bolyai volume of the hyperball piece of height ``h`` over ``area``."""
    if h < 0:
        raise NegativeHeight(f"hyperball height must be >= 0, got {h}")
    return 0.25 * area * (math.sinh(2.0 * h) + 2.0 * h)


def _pieces(fam: Family, sym: SchlafliSymbol) -> tuple:
    return (0,) if fam is Family.F1 else (0, 3)


def _report(fam, sym, mode, h) -> DensityReport:
    fam = Family.parse(fam)
    pieces = tuple(
        (i, half_hyperball_volume(truncation_area(sym, i).area, h)) for i in _pieces(fam, sym)
    )
    vol = volume(sym)
    total = math.fsum(v for _, v in pieces)
    return DensityReport(fam, sym, mode, h, pieces, vol, total / vol)


def packing_density(fam: Family, sym: SchlafliSymbol) -> DensityReport:
    """Density of the optimal congruent hyperball packing.

    Examples
    --------
    >>> round(packing_density("F1", SchlafliSymbol(3, 3, 7)).density, 5)
    0.82251
    """
    return _report(fam, sym, Mode.PACKING, packing_height(fam, sym))


def covering_density(fam: Family, sym: SchlafliSymbol) -> DensityReport:
    """Density of the thinnest congruent hyperball covering (F1 and F2 only)."""
    return _report(fam, sym, Mode.COVERING, covering_height(fam, sym))


def density(fam: Family, sym: SchlafliSymbol, mode) -> DensityReport:
    if Mode.parse(mode) is Mode.PACKING:
        return packing_density(fam, sym)
    return covering_density(fam, sym)


# orthoscheme-level admissibility, as exact rational clauses in u, v, w
FAMILY_CONSTRAINTS = {
    Family.F1: tuple(Constraint(t) for t in ("u == 3", "v == 3", "6 < w")),
    Family.F2: tuple(Constraint(t) for t in ("u == w", "1/u + 1/v < 1/2")),
    Family.F3: tuple(Constraint(t) for t in ("w == 3", "1/u + 1/v < 1/2", "1/v + 1/w < 1/2")),
    Family.F4: tuple(Constraint(t) for t in ("u != w", "1/u + 1/v < 1/2", "1/v + 1/w < 1/2")),
}


def admissible(fam: Family, sym: SchlafliSymbol) -> bool:
    """Whether ``sym`` belongs to the parameter lattice of family ``fam``."""
    if not sym.is_finite():
        return False
    values = dict(zip("uvw", sym.params))
    if not all(c(values) for c in FAMILY_CONSTRAINTS[Family.parse(fam)]):
        return False
    return realizability(sym) is Realizability.COMPACT_TRUNC_HYPERBOLIC


def admissible_symbols(fam: Family, max_param: int, min_param: int = 3):
    """Admissible symbols with every parameter in ``[min_param, max_param]``."""
    fam = Family.parse(fam)
    if max_param == INF:
        raise ValueError("optimize needs finite parameter bounds")
    rng = range(min_param, int(max_param) + 1)
    for params in _candidates(fam, rng):
        if all(min_param <= p <= max_param for p in params):
            sym = SchlafliSymbol(*params)
            if admissible(fam, sym):
                yield sym


def _candidates(fam: Family, rng):
    # walk only the free parameters of each family, in lexicographic order
    if fam is Family.F1:
        return ((3, 3, w) for w in rng)
    if fam is Family.F2:
        return ((u, v, u) for u in rng for v in rng)
    if fam is Family.F3:
        return ((u, v, 3) for u in rng for v in rng)
    return itertools.product(rng, repeat=3)


TIE_TOL = 1e-12


def better(rep: DensityReport, incumbent: DensityReport, mode) -> bool:
    """Strict improvement beyond ``TIE_TOL``; near-equal densities count as ties."""
    if Mode.parse(mode) is Mode.PACKING:
        return rep.density > incumbent.density + TIE_TOL
    return rep.density < incumbent.density - TIE_TOL


def preferred(rep, incumbent, mode) -> bool:
    """Better density, or a tie won by the lexicographically smaller symbol."""
    if better(rep, incumbent, mode):
        return True
    tie = not better(incumbent, rep, mode)
    return tie and rep.sym.sort_key() < incumbent.sym.sort_key()


def optimize(fam: Family, mode, max_param: int, min_param: int = 3):
    """Best density over the admissible lattice.

    Packing maximises and covering minimises the density; ties go to the
    lexicographically smallest symbol.

    Returns
    -------
    tuple
        ``(SchlafliSymbol, DensityReport)``.
    """
    fam, mode = Family.parse(fam), Mode.parse(mode)
    best = None
    for sym in admissible_symbols(fam, max_param, min_param):
        rep = density(fam, sym, mode)
        if best is None or preferred(rep, best, mode):
            best = rep
    if best is None:
        raise EmptyAdmissibleSet(f"no admissible {fam.value} symbol with parameters <= {max_param}")
    return best.sym, best


@dataclass(frozen=True)
class TableRow:
    sym: SchlafliSymbol
    h: float
    vol_orthoscheme: float
    vol_pieces: float
    density: float

    @property
    def values(self) -> tuple:
        return (self.h, self.vol_orthoscheme, self.vol_pieces, self.density)


def _syms(*triples):
    return tuple(SchlafliSymbol(*t) for t in triples)


_F1_U = (7, 8, 9, 20, 50, 100, INF)
_F2_P = ((7, 3, 7), (6, 4, 6), (8, 3, 8), (8, 4, 8), (5, 4, 5), (4, 5, 4), (4, 6, 4), (3, 7, 3))
_F2_C = ((7, 3, 7), (6, 4, 6), (8, 3, 8), (5, 4, 5), (8, 4, 8), (4, 5, 4), (4, 6, 4), (3, 7, 3))

# (family, mode, row symbols) in printed row order
TABLES = {
    "T1p": (Family.F1, Mode.PACKING, _syms(*((3, 3, u) for u in _F1_U))),
    "T1c": (Family.F1, Mode.COVERING, _syms(*((3, 3, u) for u in _F1_U))),
    "T2p": (Family.F2, Mode.PACKING, _syms(*_F2_P)),
    "T2c": (Family.F2, Mode.COVERING, _syms(*_F2_C)),
    "T3p": (
        Family.F3,
        Mode.PACKING,
        _syms(*((u, v, 3) for v in (7, 8, 9) for u in (4, 5, 50))),
    ),
    "T4p": (
        Family.F4,
        Mode.PACKING,
        _syms(
            (7, 3, 8), (7, 3, 9), (7, 3, 50),
            (8, 3, 9), (8, 3, 10), (8, 3, 50),
            (5, 4, 6), (5, 4, 7), (5, 4, 50),
            (4, 5, 5), (4, 5, 6), (4, 5, 50),
            (4, 6, 5), (4, 6, 6), (4, 6, 50),
        ),
    ),
}


def table_id(which: str) -> str:
    key = str(which).strip()
    if not key.upper().startswith("T"):
        key = "T" + key
    key = key[0].upper() + key[1:].lower()
    if key not in TABLES:
        raise ValueError(f"unknown table {which!r}; expected one of {', '.join(TABLES)}")
    return key


def generate_table(which: str) -> list:
    """Recompute every row of a density table, in printed order."""
    fam, mode, syms = TABLES[table_id(which)]
    rows = []
    for sym in syms:
        rep = density(fam, sym, mode)
        rows.append(TableRow(sym, rep.height, rep.orthoscheme_volume, rep.pieces_volume, rep.density))
    return rows
