"""Coxeter-Schlafli matrix of a complete orthoscheme and its inverse.

The orthoscheme ``O(u, v, w)`` has essential dihedral angles ``pi/u``,
``pi/v`` and ``pi/w`` between faces ``b0 b1``, ``b1 b2`` and ``b2 b3``; all
other pairs of faces are orthogonal.  The inverse of the Gram matrix is the
co-metric ``(a_ij)``: the bilinear form in the basis of vertex vectors
``a_0 .. a_3`` through which every distance is computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import SingularMatrix

Param = Union[int, float]  # a positive integer >= 2 or math.inf

INF = math.inf

SINGULAR_TOL = 1e-14
REALIZABILITY_TOL = 1e-12
IDEAL_TOL = 1e-10


def _check_param(p) -> Param:
    if isinstance(p, float) and math.isinf(p) and p > 0:
        return INF
    if isinstance(p, (bool, np.bool_)):
        raise TypeError("Schlafli parameter must be an integer or inf")
    if isinstance(p, (int, np.integer)):
        if p < 2:
            raise ValueError(f"Schlafli parameter must be >= 2, got {p}")
        return int(p)
    if isinstance(p, float) and p.is_integer():
        return _check_param(int(p))
    raise TypeError(f"Schlafli parameter must be an integer or inf, got {p!r}")


def parse_param(text: str) -> Param:
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo", "∞"):
        return INF
    return _check_param(int(text))


def format_param(p: Param) -> str:
    return "inf" if p == INF else str(p)


@dataclass(frozen=True)
class SchlafliSymbol:
    """Parameters ``(u, v, w)`` of a complete orthoscheme.

    ``math.inf`` stands for the limiting angle ``pi/inf = 0``.
    """

    u_bar: Param
    v_bar: Param
    w_bar: Param

    def __post_init__(self):
        for name in ("u_bar", "v_bar", "w_bar"):
            object.__setattr__(self, name, _check_param(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "SchlafliSymbol":
        parts = text.replace("{", "").replace("}", "").replace("(", "").replace(")", "").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma separated parameters, got {text!r}")
        return cls(*(parse_param(p) for p in parts))

    @property
    def params(self) -> tuple:
        return (self.u_bar, self.v_bar, self.w_bar)

    @property
    def angles(self) -> tuple:
        """Essential angles (beta01, beta12, beta23) in radians."""
        return tuple(angle(p) for p in self.params)

    def reversed(self) -> "SchlafliSymbol":
        return SchlafliSymbol(self.w_bar, self.v_bar, self.u_bar)

    def is_finite(self) -> bool:
        return all(p != INF for p in self.params)

    def __iter__(self):
        return iter(self.params)

    def __str__(self):
        return ",".join(format_param(p) for p in self.params)

    def sort_key(self):
        return self.params


def angle(p: Param) -> float:
    return 0.0 if p == INF else math.pi / p


def reciprocal(p: Param) -> Fraction:
    """Exact ``1/p`` with ``1/inf = 0``."""
    return Fraction(0) if p == INF else Fraction(1, p)


@dataclass(frozen=True)
class GramMatrix:
    entries: np.ndarray = field(repr=False)
    sym: SchlafliSymbol | None = None

    @property
    def determinant(self) -> float:
        return gram_determinant(self)


@dataclass(frozen=True)
class CoMetric:
    """The bilinear form ``<a_i, a_j> = a_ij`` on the vertex basis."""

    entries: np.ndarray = field(repr=False)
    source: SchlafliSymbol | None = None

    def inner(self, x, y) -> float:
        return float(np.asarray(x, dtype=float) @ self.entries @ np.asarray(y, dtype=float))

    def __getitem__(self, ij):
        return float(self.entries[ij])


class VertexClass(Enum):
    PROPER = "Proper"
    IDEAL = "Ideal"
    OUTER = "Outer"


class Realizability(Enum):
    COMPACT_TRUNC_HYPERBOLIC = "CompactTruncHyperbolic"
    DEGENERATE_EUCLIDEAN = "DegenerateEuclidean"
    NOT_HYPERBOLIC = "NotHyperbolic"


def coxeter_gram(orders) -> np.ndarray:
    """Gram matrix ``-cos(pi/m_ij)`` for a symmetric 4x4 array of Coxeter orders.

    Diagonal entries of ``orders`` are ignored; ``inf`` gives ``-1``.
    """
    n = len(orders)
    g = np.eye(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                g[i, j] = -math.cos(angle(orders[i][j]))
    return g


def build_gram(sym: SchlafliSymbol) -> GramMatrix:
    u, v, w = sym.params
    orders = [
        [1, u, 2, 2],
        [u, 1, v, 2],
        [2, v, 1, w],
        [2, 2, w, 1],
    ]
    g = coxeter_gram(orders)
    # pi/2 entries must be exact zeros, not 6e-17
    g[0, 2] = g[2, 0] = g[0, 3] = g[3, 0] = g[1, 3] = g[3, 1] = 0.0
    for (i, j), p in zip(((0, 1), (1, 2), (2, 3)), sym.params):
        if p == 2:
            g[i, j] = g[j, i] = 0.0
    return GramMatrix(g, sym)


def gram_determinant(g: GramMatrix) -> float:
    return float(np.linalg.det(g.entries))


def closed_form_determinant(sym: SchlafliSymbol) -> float:
    """``sin^2(pi/u) sin^2(pi/w) - cos^2(pi/v)``."""
    b01, b12, b23 = sym.angles
    return math.sin(b01) ** 2 * math.sin(b23) ** 2 - math.cos(b12) ** 2


def invert_gram(g: GramMatrix) -> CoMetric:
    det = gram_determinant(g)
    if abs(det) < SINGULAR_TOL:
        raise SingularMatrix(f"Gram matrix is singular (det = {det:.3e})")
    a = np.linalg.inv(g.entries)
    a = 0.5 * (a + a.T)
    return CoMetric(a, g.sym)


def cometric(sym: SchlafliSymbol) -> CoMetric:
    return invert_gram(build_gram(sym))


def classify_vertices(c: CoMetric, tol: float = IDEAL_TOL) -> tuple:
    """Sign of ``a_ii`` per vertex: negative proper, zero ideal, positive outer."""
    diag = np.diag(c.entries)
    scale = float(np.max(np.abs(diag)))
    if scale == 0.0:
        scale = 1.0
    out = []
    for d in diag / scale:
        if abs(d) < tol:
            out.append(VertexClass.IDEAL)
        elif d < 0:
            out.append(VertexClass.PROPER)
        else:
            out.append(VertexClass.OUTER)
    return tuple(out)


def realizability(sym: SchlafliSymbol, tol: float = REALIZABILITY_TOL) -> Realizability:
    """Classify a symbol as a compact hyperbolic trunc-orthoscheme or not.

    ``CompactTruncHyperbolic`` needs signature (+,+,+,-) and no ideal vertex,
    and, when both end vertices are outer, ultraparallel truncating planes.
    A vanishing determinant or an ideal vertex (Euclidean vertex figure)
    gives ``DegenerateEuclidean``.
    """
    det = closed_form_determinant(sym)
    if abs(det) <= tol:
        return Realizability.DEGENERATE_EUCLIDEAN
    if det > 0:
        return Realizability.NOT_HYPERBOLIC
    c = cometric(sym)
    classes = classify_vertices(c)
    if VertexClass.IDEAL in classes:
        return Realizability.DEGENERATE_EUCLIDEAN
    if classes[1] is VertexClass.OUTER or classes[2] is VertexClass.OUTER:
        return Realizability.NOT_HYPERBOLIC
    if classes[0] is VertexClass.OUTER and classes[3] is VertexClass.OUTER:
        a = c.entries
        q = abs(a[0, 3]) / math.sqrt(a[0, 0] * a[3, 3])
        if abs(q - 1.0) <= IDEAL_TOL:
            # parallel truncating planes meet at an ideal point
            return Realizability.DEGENERATE_EUCLIDEAN
        if q < 1.0:
            return Realizability.NOT_HYPERBOLIC
    return Realizability.COMPACT_TRUNC_HYPERBOLIC
