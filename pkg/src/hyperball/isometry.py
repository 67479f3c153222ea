"""Reflection matrices of a Coxeter simplex and numeric relator checks.

Coordinates are taken in the basis dual to the face normals, so the form is
the Gram matrix ``G`` itself: the face ``b^i`` has normal ``e_i`` and the
polar plane of vertex ``A_j`` has normal ``G^{-1} e_j``.  A reflection in
the plane with normal ``n`` is ``x -> x - 2 <x, n> / <n, n> n``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .catalog.model import ExtensionKind, GroupSeries, Relation
from .errors import UnboundGenerator, VertexNotTruncated
from .schlafli import GramMatrix, SchlafliSymbol, VertexClass, build_gram, classify_vertices, coxeter_gram, invert_gram

PASS_TOL = 1e-9
FORM_TOL = 1e-10


@dataclass(frozen=True)
class Isometry:
    matrix: np.ndarray = field(repr=False)
    form: np.ndarray = field(repr=False)
    name: str = ""

    def form_defect(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m.T @ self.form @ m - self.form)))

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.matrix @ other.matrix, self.form, f"{self.name}{other.name}")


def _reflect(n: np.ndarray, g: np.ndarray, name: str) -> Isometry:
    nn = float(n @ g @ n)
    m = np.eye(len(n)) - 2.0 * np.outer(n, n @ g) / nn
    return Isometry(m, g, name)


def reflection(i: int, g: GramMatrix) -> Isometry:
    """Reflection in the face ``b^i``."""
    e = np.zeros(len(g.entries))
    e[i] = 1.0
    return _reflect(e, g.entries, f"m{i}")


def polar_reflection(j: int, g: GramMatrix) -> Isometry:
    """Reflection in the polar (truncating) plane of vertex ``A_j``.

    Raises
    ------
    VertexNotTruncated
        If ``A_j`` is not an outer vertex.
    """
    c = invert_gram(g)
    if classify_vertices(c)[j] is not VertexClass.OUTER:
        raise VertexNotTruncated(f"vertex A_{j} is not outer; it has no polar plane")
    return _reflect(c.entries[:, j].copy(), g.entries, f"a{j}")


def word_matrix(word, gens: dict) -> np.ndarray:
    """Product of the word's letters, left to right."""
    m = None
    for name, power in word:
        try:
            iso = gens[name]
        except KeyError:
            raise UnboundGenerator(f"generator {name!r} has no matrix") from None
        a = iso.matrix if isinstance(iso, Isometry) else np.asarray(iso)
        p = np.linalg.matrix_power(a, power) if power >= 0 else np.linalg.matrix_power(np.linalg.inv(a), -power)
        m = p if m is None else m @ p
    return m


def verify_relator(word, exponent: int, gens: dict) -> float:
    """Max-norm distance of ``word^exponent`` from ``+I`` or ``-I``.

    Examples
    --------
    >>> verify_relator((), 1, {})
    0.0
    """
    if not word:
        return 0.0
    m = word_matrix(word, gens)
    p = np.linalg.matrix_power(m, exponent) if exponent >= 0 else np.linalg.matrix_power(np.linalg.inv(m), -exponent)
    eye = np.eye(len(p))
    return float(min(np.max(np.abs(p - eye)), np.max(np.abs(p + eye))))


@dataclass(frozen=True)
class RelatorResult:
    relation: str
    residual: float | None  # None when a generator has no matrix
    note: str = ""

    def passed(self, tol: float = PASS_TOL) -> bool:
        return self.residual is not None and self.residual < tol


def orthoscheme_relators(sym: SchlafliSymbol, with_polar: bool = False) -> tuple:
    """Coxeter relators of ``{u, v, w}``, plus polar ones for outer vertices.

    Returns ``(gens, [(text, word, exponent), ...])``.
    """
    g = build_gram(sym)
    gens = {f"m{i}": reflection(i, g) for i in range(4)}
    orders = {(0, 1): sym.u_bar, (1, 2): sym.v_bar, (2, 3): sym.w_bar}
    rels = [(f"m{i}^2", ((f"m{i}", 1),), 2) for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            k = orders.get((i, j), 2)
            if k == float("inf"):
                continue
            rels.append((f"(m{i} m{j})^{k}", ((f"m{i}", 1), (f"m{j}", 1)), int(k)))
    if with_polar:
        classes = classify_vertices(invert_gram(g))
        for j in (0, 3):
            if classes[j] is not VertexClass.OUTER:
                continue
            a = f"a{j}"
            gens[a] = polar_reflection(j, g)
            rels.append((f"{a}^2", ((a, 1),), 2))
            for i in range(4):
                if i != j:
                    rels.append((f"({a} m{i})^2", ((a, 1), (f"m{i}", 1)), 2))
    return gens, rels


def check_orthoscheme(sym: SchlafliSymbol, with_polar: bool = False) -> list:
    gens, rels = orthoscheme_relators(sym, with_polar)
    return [RelatorResult(t, verify_relator(w, e, gens)) for t, w, e in rels]


_MIRROR = re.compile(r"m(\d)$")
_POLAR = re.compile(r"(?:a|mbar)(\d)$")


def series_coxeter_orders(s: GroupSeries, values: dict) -> list:
    """Coxeter matrix read from the ``(m_i m_j)^k`` relations of a reflection series."""
    mirrors = sorted(int(_MIRROR.match(g).group(1)) for g in s.generators if _MIRROR.match(g))
    if mirrors != [0, 1, 2, 3]:
        raise UnboundGenerator(f"{s.id} is not generated by four plane reflections")
    orders = [[1] * 4 for _ in range(4)]
    seen = set()
    for r in s.relations:
        names = [g for g, _ in r.word]
        if len(names) == 2 and all(_MIRROR.match(n) for n in names):
            i, j = (int(n[1]) for n in names)
            k = int(r.exponent(values))
            orders[i][j] = orders[j][i] = k
            seen.add(frozenset((i, j)))
    if len(seen) != 6:
        raise UnboundGenerator(f"{s.id} does not fix every dihedral angle")
    return orders


def verify_series(s: GroupSeries, values: dict) -> list:
    """Check every relation of a reflection series and its reflection extensions.

    Face reflections ``m_i`` and the polar reflections ``a_j`` / ``mbar_j`` of
    the outer vertices are realised as matrices; relations using any other
    generator are reported with ``residual=None``.
    """
    g = GramMatrix(coxeter_gram(series_coxeter_orders(s, values)))
    gens = {f"m{i}": reflection(i, g) for i in range(4)}
    scopes = [(s.relations, "series")]
    for e in s.extensions:
        if e.kind is ExtensionKind.REFLECTION:
            for name in e.new_generators:
                m = _POLAR.match(name)
                if m:
                    gens[name] = polar_reflection(int(m.group(1)), g)
        scopes.append((e.new_relations, f"extension {e.name}"))
    out = []
    for rels, where in scopes:
        for r in rels:
            out.append(_check(r, values, gens, where))
    return out


def _check(r: Relation, values: dict, gens: dict, where: str) -> RelatorResult:
    try:
        res = verify_relator(r.word, int(r.exponent(values)), gens)
    except UnboundGenerator as exc:
        return RelatorResult(r.text, None, f"{where}: out of scope, {exc}")
    return RelatorResult(r.text, res, where)
