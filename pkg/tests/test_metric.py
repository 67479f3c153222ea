import math

import numpy as np
import pytest

from hyperball import (
    INF,
    Family,
    SchlafliSymbol,
    TruncOrthoscheme,
    cometric,
    covering_height,
    dist_plane_plane,
    dist_point_plane,
    dist_point_point,
    packing_candidates,
    packing_height,
    realizability,
)
from hyperball.schlafli import Realizability
from hyperball.errors import FamilyMismatch, NotProperPoint, PlanesIntersect, UnsupportedFamily, VertexNotTruncated
from hyperball.metric import foot, point, pole

from conftest import TABLE_SYMBOLS

F1_SYMBOLS = [SchlafliSymbol(3, 3, u) for u in range(7, 101)]


def sinh_c_a1(u):
    s = math.sin(math.pi / u)
    return 0.5 * s / math.sqrt(0.25 - s * s)


def cosh_a2_a3(a):
    return math.sqrt(1.0 - a[2, 3] ** 2 / (a[2, 2] * a[3, 3]))


def cosh_f03_a3(a):
    return math.sqrt((a[3, 3] - a[0, 3]) / (2.0 * a[3, 3]))


def cosh_f03_a3_trig(u, v):
    cu, cv, su = math.cos(math.pi / u), math.cos(math.pi / v), math.sin(math.pi / u)
    return math.sqrt(0.5 * (1.0 + cu * cu * cv / (cv * cv - su * su)))


def test_closed_form_c_a1():
    for sym in F1_SYMBOLS:
        h = packing_height(Family.F1, sym)
        assert math.sinh(h) == pytest.approx(sinh_c_a1(sym.w_bar), abs=1e-10)


def test_closed_forms_f2():
    for sym in TABLE_SYMBOLS["F2"]:
        a = cometric(sym).entries
        cand = packing_candidates(Family.F2, sym)
        assert math.cosh(cand["d(A2,a3)"]) == pytest.approx(cosh_a2_a3(a), abs=1e-10)
        assert math.cosh(cand["d(F03,a3)"]) == pytest.approx(cosh_f03_a3(a), abs=1e-10)
        assert math.cosh(cand["d(F03,a3)"]) == pytest.approx(cosh_f03_a3_trig(sym.u_bar, sym.v_bar), abs=1e-10)


def test_closed_form_a2_a3_all_doubly_truncated():
    for fam in ("F2", "F3", "F4"):
        for sym in TABLE_SYMBOLS[fam]:
            t = TruncOrthoscheme.from_symbol(sym)
            d = dist_point_plane(t.cometric, t.vertex(2), t.truncation_pole(3))
            assert math.cosh(d) == pytest.approx(cosh_a2_a3(t.cometric.entries), abs=1e-10)


def test_half_turn_symmetry():
    syms = list(TABLE_SYMBOLS["F2"]) + [SchlafliSymbol(u, v, u) for u in range(3, 12) for v in range(3, 12)]
    checked = 0
    for sym in syms:
        if realizability(sym) is not Realizability.COMPACT_TRUNC_HYPERBOLIC:
            continue
        t = TruncOrthoscheme.from_symbol(sym)
        try:
            hj = dist_plane_plane(t.cometric, t.truncation_pole(0), t.truncation_pole(3))
            f03 = dist_point_plane(t.cometric, t.F03, t.truncation_pole(3))
        except (VertexNotTruncated, PlanesIntersect, NotProperPoint):
            continue
        assert hj / 2 == pytest.approx(f03, abs=1e-12)
        checked += 1
    assert checked >= 8


def test_trivial_distances():
    t = TruncOrthoscheme.from_symbol(SchlafliSymbol(7, 3, 7))
    c = t.cometric
    assert dist_point_point(c, t.vertex(1), t.vertex(1)) == 0.0
    a3 = t.truncation_pole(3)
    assert dist_plane_plane(c, a3, a3) == 0.0
    f = foot(c, t.vertex(2), a3)
    assert abs(c.inner(f, a3.array)) < 1e-12
    assert dist_point_plane(c, f, a3) == pytest.approx(0.0, abs=1e-12)


def test_distance_examples():
    t = TruncOrthoscheme.from_symbol(SchlafliSymbol(3, 3, 7))
    c = t.cometric
    assert dist_point_plane(c, t.vertex(1), t.truncation_pole(0)) == pytest.approx(0.78871, abs=5e-6)
    assert dist_point_plane(c, t.vertex(3), t.truncation_pole(0)) == pytest.approx(1.06739, abs=5e-6)
    assert covering_height("F2", SchlafliSymbol(7, 3, 7)) == pytest.approx(1.49903, abs=5e-6)
    assert packing_height("F2", SchlafliSymbol(7, 3, 7)) == pytest.approx(1.23469, abs=5e-6)


@pytest.mark.parametrize(
    "fam, sym, mode, expected",
    [
        ("F1", (3, 3, 7), "p", 0.78871),
        ("F2", (6, 4, 6), "p", 0.69217),
        ("F3", (4, 8, 3), "p", 0.56419),
        ("F4", (4, 5, 5), "p", 0.69129),
        ("F1", (3, 3, 7), "c", 1.06739),
        ("F2", (7, 3, 7), "c", 1.49903),
        ("F1", (3, 3, INF), "c", 0.65848),
        ("F1", (3, 3, INF), "p", 0.0),
    ],
)
def test_heights(fam, sym, mode, expected):
    f = packing_height if mode == "p" else covering_height
    assert f(fam, SchlafliSymbol(*sym)) == pytest.approx(expected, abs=1e-5)


def test_f3_f4_reversal_invariance():
    # reversing an F3 symbol (u,v,3) gives (3,v,u), an F4 symbol; F4 is closed under reversal
    for fam in ("F3", "F4"):
        for sym in TABLE_SYMBOLS[fam]:
            assert packing_height("F4", sym.reversed()) == pytest.approx(packing_height(fam, sym), abs=1e-12)


def test_errors():
    c = cometric(SchlafliSymbol(3, 3, 7))
    outer = point(np.eye(4)[0])
    with pytest.raises(NotProperPoint):
        dist_point_point(c, outer, point(np.eye(4)[1]))
    with pytest.raises(NotProperPoint):
        dist_point_plane(c, point(np.eye(4)[1]), pole(np.eye(4)[1]))
    with pytest.raises(FamilyMismatch):
        packing_height("F1", SchlafliSymbol(7, 3, 7))
    with pytest.raises(FamilyMismatch):
        packing_height("F2", SchlafliSymbol(7, 3, 8))
    with pytest.raises(UnsupportedFamily):
        covering_height("F3", SchlafliSymbol(4, 8, 3))
    t = TruncOrthoscheme.from_symbol(SchlafliSymbol(3, 3, 7))
    with pytest.raises(VertexNotTruncated):
        t.truncation_pole(3)


def test_intersecting_planes():
    c = cometric(SchlafliSymbol(7, 3, 7))
    # the face planes b^2 and b^3 meet at angle pi/7
    g = np.linalg.inv(c.entries)
    with pytest.raises(PlanesIntersect):
        dist_plane_plane(c, pole(g[2]), pole(g[3]))
