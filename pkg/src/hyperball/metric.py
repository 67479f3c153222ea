"""Projective-metric distances over the co-metric of a trunc-orthoscheme.

Points and planes are both vectors in the vertex basis ``a_0 .. a_3``.  A
point ``x`` is proper when ``<x, x> < 0``; a plane is given by its pole
``p`` with ``<p, p> > 0``.  The truncating plane of an outer vertex ``A_i``
is its polar plane, whose pole is the vertex vector ``a_i`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from .errors import (
    ArgumentBelowOne,
    FamilyMismatch,
    NotProperPoint,
    PlanesIntersect,
    UnsupportedFamily,
    VertexNotTruncated,
)
from .schlafli import (
    CoMetric,
    SchlafliSymbol,
    VertexClass,
    classify_vertices,
    cometric,
)

CLAMP_TOL = 1e-12
# relative size of <x,x> below which a point counts as ideal
IDEAL_POINT_TOL = 1e-10


class Kind(Enum):
    POINT = "Point"
    POLE = "PlanePole"


class Family(Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"

    @classmethod
    def parse(cls, text) -> "Family":
        if isinstance(text, Family):
            return text
        return cls(str(text).strip().upper())


@dataclass(frozen=True)
class MetricVector:
    coords: tuple
    kind: Kind = Kind.POINT

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords)

    def __add__(self, other):
        return MetricVector(self.array + other.array, self.kind)


def point(coords) -> MetricVector:
    return MetricVector(coords, Kind.POINT)


def pole(coords) -> MetricVector:
    return MetricVector(coords, Kind.POLE)


def _coords(x):
    return x.array if isinstance(x, MetricVector) else np.asarray(x, dtype=float)


def _scale(c: CoMetric, x) -> float:
    # magnitude of <x, x> before cancellation
    return float(np.sum(np.abs(_coords(x))) ** 2 * np.max(np.abs(c.entries)))


def _is_ideal(c: CoMetric, x, xx: float) -> bool:
    return abs(xx) <= IDEAL_POINT_TOL * max(_scale(c, x), 1e-300)


def _acosh_clamped(arg: float) -> float:
    if arg < 1.0:
        if arg < 1.0 - CLAMP_TOL:
            raise ArgumentBelowOne(f"arccosh argument {arg!r} < 1")
        return 0.0
    return math.acosh(arg)


def dist_point_point(c: CoMetric, x, y) -> float:
    """Hyperbolic distance between two proper points."""
    xx, yy, xy = c.inner(_coords(x), _coords(x)), c.inner(_coords(y), _coords(y)), c.inner(_coords(x), _coords(y))
    if not xx < 0 or not yy < 0:
        raise NotProperPoint("both arguments must be proper points (<x,x> < 0)")
    return _acosh_clamped(-xy / math.sqrt(xx * yy))


def dist_point_plane(c: CoMetric, x, p) -> float:
    """Distance from a point to the plane with pole ``p``.

    An ideal point lying on the plane is at distance 0 (the limit reached
    when an infinite Schlafli parameter sends a vertex to the absolute);
    an ideal point off the plane is infinitely far.
    """
    xv, pv = _coords(x), _coords(p)
    xx, pp, xp = c.inner(xv, xv), c.inner(pv, pv), c.inner(xv, pv)
    if not pp > 0:
        raise NotProperPoint("plane pole must satisfy <p,p> > 0")
    if _is_ideal(c, xv, xx):
        incident = abs(xp) <= IDEAL_POINT_TOL * math.sqrt(max(_scale(c, xv), 1e-300) * _scale(c, pv))
        return 0.0 if incident else math.inf
    if xx > 0:
        raise NotProperPoint("point must satisfy <x,x> < 0")
    return math.asinh(abs(xp) / math.sqrt(-xx * pp))


def dist_plane_plane(c: CoMetric, p, q) -> float:
    """Distance between two ultraparallel planes given by their poles."""
    pv, qv = _coords(p), _coords(q)
    pp, qq, pq = c.inner(pv, pv), c.inner(qv, qv), c.inner(pv, qv)
    if not (pp > 0 and qq > 0):
        raise NotProperPoint("plane poles must satisfy <p,p> > 0")
    arg = abs(pq) / math.sqrt(pp * qq)
    if arg < 1.0 - CLAMP_TOL:
        raise PlanesIntersect(f"planes intersect (cosine {arg:.6f})")
    return _acosh_clamped(arg)


def foot(c: CoMetric, x, p) -> np.ndarray:
    """Orthogonal projection of ``x`` onto the plane with pole ``p``."""
    xv, pv = _coords(x), _coords(p)
    return xv - (c.inner(xv, pv) / c.inner(pv, pv)) * pv


@dataclass(frozen=True)
class TruncOrthoscheme:
    """Truncated orthoscheme with its named anchor points.

    ``C`` and ``H`` are the feet of ``A_1`` and ``A_3`` on the truncating
    plane ``a_0``; ``Q`` and ``J`` are the feet of ``A_2`` and ``A_0`` on
    ``a_3``.  ``F03 = a_0 + a_3`` and ``F12 = a_1 + a_2`` lie on the
    half-turn axis when ``u = w``.
    """

    sym: SchlafliSymbol
    cometric: CoMetric = field(repr=False)

    @classmethod
    def from_symbol(cls, sym: SchlafliSymbol) -> "TruncOrthoscheme":
        return cls(sym, cometric(sym))

    @cached_property
    def vertex_classes(self) -> tuple:
        return classify_vertices(self.cometric)

    def vertex(self, i: int) -> MetricVector:
        return point(np.eye(4)[i])

    def truncation_pole(self, i: int) -> MetricVector:
        if self.vertex_classes[i] is not VertexClass.OUTER:
            raise VertexNotTruncated(f"vertex A_{i} of {{{self.sym}}} is {self.vertex_classes[i].value}")
        return pole(np.eye(4)[i])

    @property
    def truncation_poles(self) -> dict:
        return {i: self.truncation_pole(i) for i in (0, 3) if self.vertex_classes[i] is VertexClass.OUTER}

    @property
    def F03(self) -> MetricVector:
        return point(np.eye(4)[0] + np.eye(4)[3])

    @property
    def F12(self) -> MetricVector:
        return point(np.eye(4)[1] + np.eye(4)[2])

    @property
    def C(self) -> MetricVector:
        return point(foot(self.cometric, np.eye(4)[1], self.truncation_pole(0)))

    @property
    def H(self) -> MetricVector:
        return point(foot(self.cometric, np.eye(4)[3], self.truncation_pole(0)))

    @property
    def J(self) -> MetricVector:
        return point(foot(self.cometric, np.eye(4)[0], self.truncation_pole(3)))

    @property
    def Q(self) -> MetricVector:
        return point(foot(self.cometric, np.eye(4)[2], self.truncation_pole(3)))

    def d_point_point(self, x, y) -> float:
        return dist_point_point(self.cometric, x, y)

    def d_point_plane(self, x, p) -> float:
        return dist_point_plane(self.cometric, x, p)

    def d_plane_plane(self, p, q) -> float:
        return dist_plane_plane(self.cometric, p, q)


def check_family(fam: Family, sym: SchlafliSymbol) -> None:
    fam = Family.parse(fam)
    u, v, w = sym.params
    if fam is Family.F1 and not (u == 3 and v == 3):
        raise FamilyMismatch(f"F1 needs a symbol (3,3,w), got {{{sym}}}")
    if fam is Family.F2 and u != w:
        raise FamilyMismatch(f"F2 needs u = w, got {{{sym}}}")
    if fam is Family.F3 and w != 3:
        raise FamilyMismatch(f"F3 needs w = 3, got {{{sym}}}")
    if fam is Family.F4 and u == w:
        raise FamilyMismatch(f"F4 needs u != w, got {{{sym}}}")


def packing_candidates(fam: Family, sym: SchlafliSymbol) -> dict:
    """The competing distances whose minimum is the packing height."""
    fam = Family.parse(fam)
    check_family(fam, sym)
    t = TruncOrthoscheme.from_symbol(sym)
    c = t.cometric
    if fam is Family.F1:
        return {"d(C,A1)": dist_point_plane(c, t.vertex(1), t.truncation_pole(0))}
    a3 = t.truncation_pole(3)
    if fam is Family.F2:
        return {
            "d(A2,a3)": dist_point_plane(c, t.vertex(2), a3),
            "d(F03,a3)": dist_point_plane(c, t.F03, a3),
        }
    a0 = t.truncation_pole(0)
    return {
        "d(H,J)/2": dist_plane_plane(c, a0, a3) / 2.0,
        "d(Q,A2)": dist_point_plane(c, t.vertex(2), a3),
        "d(C,A1)": dist_point_plane(c, t.vertex(1), a0),
    }


def covering_candidates(fam: Family, sym: SchlafliSymbol) -> dict:
    fam = Family.parse(fam)
    if fam in (Family.F3, Family.F4):
        raise UnsupportedFamily(f"covering heights are not defined for {fam.value}")
    check_family(fam, sym)
    t = TruncOrthoscheme.from_symbol(sym)
    c = t.cometric
    if fam is Family.F1:
        return {"d(H,A3)": dist_point_plane(c, t.vertex(3), t.truncation_pole(0))}
    a = c.entries
    coeff = -(a[1, 3] + a[2, 3]) / a[3, 3]
    foot_f12 = t.F12.array + coeff * np.eye(4)[3]
    return {"d(F12,a3)": dist_point_point(c, t.F12, foot_f12)}


def packing_height(fam: Family, sym: SchlafliSymbol) -> float:
    return min(packing_candidates(fam, sym).values())


def covering_height(fam: Family, sym: SchlafliSymbol) -> float:
    return min(covering_candidates(fam, sym).values())
