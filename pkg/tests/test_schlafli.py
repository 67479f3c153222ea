import itertools
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperball import (
    INF,
    Realizability,
    SchlafliSymbol,
    VertexClass,
    build_gram,
    classify_vertices,
    cometric,
    gram_determinant,
    invert_gram,
    realizability,
)
from hyperball.errors import SingularMatrix
from hyperball.schlafli import closed_form_determinant, parse_param

params = st.sampled_from([2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 20, 50, 100, INF])


def test_build_gram_337():
    g = build_gram(SchlafliSymbol(3, 3, 7)).entries
    assert g[0, 1] == pytest.approx(-0.5, abs=1e-15)
    assert g[1, 2] == pytest.approx(-0.5, abs=1e-15)
    assert g[2, 3] == pytest.approx(-math.cos(math.pi / 7), abs=1e-15)
    assert g[2, 3] == pytest.approx(-0.90097, abs=5e-6)
    assert g[0, 2] == g[0, 3] == g[1, 3] == 0.0
    assert np.all(np.diag(g) == 1.0)
    assert np.array_equal(g, g.T)


def test_build_gram_222_is_identity():
    g = build_gram(SchlafliSymbol(2, 2, 2)).entries
    assert np.allclose(g, np.eye(4), atol=1e-16)


def test_build_gram_infinite_parameter():
    g = build_gram(SchlafliSymbol(3, 3, INF)).entries
    assert g[2, 3] == -1.0


def test_parse_symbol():
    assert SchlafliSymbol.parse("3,3,inf") == SchlafliSymbol(3, 3, INF)
    assert SchlafliSymbol.parse("{7,3,7}") == SchlafliSymbol(7, 3, 7)
    assert str(SchlafliSymbol(3, 3, INF)) == "3,3,inf"
    assert parse_param("oo") == INF
    with pytest.raises(ValueError):
        SchlafliSymbol.parse("3,3")
    with pytest.raises(ValueError):
        SchlafliSymbol(1, 3, 3)


def test_determinant_337_closed_form():
    sym = SchlafliSymbol(3, 3, 7)
    b = gram_determinant(build_gram(sym))
    assert b == pytest.approx(0.75 * math.sin(math.pi / 7) ** 2 - 0.25, abs=1e-12)
    assert b == pytest.approx(-0.10881, abs=5e-6)


def test_determinant_222_and_737():
    assert gram_determinant(build_gram(SchlafliSymbol(2, 2, 2))) == pytest.approx(1.0, abs=1e-14)
    b = gram_determinant(build_gram(SchlafliSymbol(7, 3, 7)))
    assert b < 0
    mpmath.mp.dps = 40
    exact = mpmath.sin(mpmath.pi / 7) ** 4 - mpmath.mpf(1) / 4
    assert b == pytest.approx(float(exact), abs=1e-12)


def _mp_gram(sym):
    def c(p):
        return mpmath.mpf(1) if p == INF else mpmath.cos(mpmath.pi / p)

    u, v, w = (c(p) for p in sym.params)
    return mpmath.matrix([[1, -u, 0, 0], [-u, 1, -v, 0], [0, -v, 1, -w], [0, 0, -w, 1]])


@given(params, params, params)
def test_determinant_matches_mpmath_and_closed_form(u, v, w):
    sym = SchlafliSymbol(u, v, w)
    mpmath.mp.dps = 40
    exact = float(mpmath.det(_mp_gram(sym)))
    assert gram_determinant(build_gram(sym)) == pytest.approx(exact, abs=1e-12)
    assert closed_form_determinant(sym) == pytest.approx(exact, abs=1e-12)


def _printed_inverse(sym):
    # adjugate closed form of the tridiagonal Gram matrix, divided by B
    c1, c2, c3 = (0.0 if p == INF else math.cos(math.pi / p) for p in sym.params)
    s1, s3 = 1 - c1 * c1, 1 - c3 * c3
    b = s1 * s3 - c2 * c2
    m = np.array([
        [s3 - c2 * c2, c1 * s3, c1 * c2, c1 * c2 * c3],
        [c1 * s3, s3, c2, c2 * c3],
        [c1 * c2, c2, s1, c3 * s1],
        [c1 * c2 * c3, c2 * c3, c3 * s1, s1 - c2 * c2],
    ])
    return m / b


def test_inverse_matches_closed_form_grid():
    for u, v, w in itertools.product(range(3, 21), repeat=3):
        sym = SchlafliSymbol(u, v, w)
        if closed_form_determinant(sym) >= -1e-10:
            continue
        a = cometric(sym).entries
        ref = _printed_inverse(sym)
        for i, j in ((0, 0), (3, 3), (0, 3), (1, 2), (2, 2), (1, 1)):
            assert a[i, j] == pytest.approx(ref[i, j], abs=1e-10), (sym, i, j)


@given(params, params, params)
def test_inverse_times_gram_is_identity(u, v, w):
    sym = SchlafliSymbol(u, v, w)
    g = build_gram(sym)
    if abs(gram_determinant(g)) <= 1e-10:
        return
    a = invert_gram(g).entries
    assert np.allclose(a @ g.entries, np.eye(4), atol=1e-12 * max(1.0, np.abs(a).max()))
    assert np.allclose(a, a.T, atol=1e-12 * max(1.0, np.abs(a).max()))


def test_inverse_222_and_singular():
    assert np.allclose(invert_gram(build_gram(SchlafliSymbol(2, 2, 2))).entries, np.eye(4))
    with pytest.raises(SingularMatrix):
        invert_gram(build_gram(SchlafliSymbol(4, 3, 4)))


def test_inverse_signs_337():
    a = cometric(SchlafliSymbol(3, 3, 7)).entries
    assert a[0, 0] > 0
    assert a[3, 3] < 0


def test_classify_vertices():
    P, I, O = VertexClass.PROPER, VertexClass.IDEAL, VertexClass.OUTER
    assert classify_vertices(cometric(SchlafliSymbol(3, 3, 7))) == (O, P, P, P)
    assert classify_vertices(cometric(SchlafliSymbol(7, 3, 7))) == (O, P, P, O)


def test_ideal_vertex_336():
    # sin^2(pi/6) - cos^2(pi/3) = 0 makes a_00 vanish while B = -1/16
    sym = SchlafliSymbol(3, 3, 6)
    assert closed_form_determinant(sym) == pytest.approx(-1 / 16, abs=1e-15)
    assert classify_vertices(cometric(sym))[0] is VertexClass.IDEAL
    assert realizability(sym) is Realizability.DEGENERATE_EUCLIDEAN


def test_ideal_vertex_band():
    # sin^2(pi/4) = cos^2(pi/4), so a_00 = 0 with B = -1/8
    sym = SchlafliSymbol(3, 4, 4)
    assert closed_form_determinant(sym) < -1e-3
    assert classify_vertices(cometric(sym))[0] is VertexClass.IDEAL
    assert realizability(sym) is Realizability.DEGENERATE_EUCLIDEAN


@pytest.mark.parametrize(
    "sym, expected",
    [
        ((3, 3, 7), Realizability.COMPACT_TRUNC_HYPERBOLIC),
        ((7, 3, 7), Realizability.COMPACT_TRUNC_HYPERBOLIC),
        ((3, 3, INF), Realizability.DEGENERATE_EUCLIDEAN),
        ((5, INF, 3), Realizability.DEGENERATE_EUCLIDEAN),
        ((4, 3, 4), Realizability.DEGENERATE_EUCLIDEAN),
        ((3, 3, 6), Realizability.DEGENERATE_EUCLIDEAN),
        ((3, 3, 5), Realizability.NOT_HYPERBOLIC),
        ((2, 2, 2), Realizability.NOT_HYPERBOLIC),
    ],
)
def test_realizability(sym, expected):
    assert realizability(SchlafliSymbol(*sym)) is expected


@given(params, params, params)
def test_realizability_reversal_symmetric(u, v, w):
    sym = SchlafliSymbol(u, v, w)
    assert realizability(sym) is realizability(sym.reversed())
