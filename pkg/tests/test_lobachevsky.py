import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import quad

from hyperball import lob, lob_vec
from hyperball.errors import NonFiniteInput


def _from_zero(x):
    # -log(2 sin t) = -log t - log(2 sin t / t); the log t part goes to the QAWS weight
    if x == 0.0:
        return 0.0
    sing = quad(lambda t: 1.0, 0.0, x, weight="alg-loga", wvar=(0.0, 0.0))[0]
    smooth = quad(lambda t: math.log(2.0 * math.sin(t) / t), 0.0, x, epsabs=1e-14, epsrel=1e-13)[0]
    return -sing - smooth


def quad_oracle(x):
    """-int_0^x log|2 sin t| dt by adaptive quadrature on [0, pi], split at pi/2."""
    if x <= math.pi / 2:
        return _from_zero(x)
    # reflect t -> pi - t so the singularity at pi sits at 0
    return _from_zero(math.pi / 2) + (_from_zero(math.pi / 2) - _from_zero(math.pi - x))


def test_special_values():
    assert lob(0.0) == 0.0
    assert lob(math.pi / 2) == pytest.approx(0.0, abs=1e-15)
    assert lob(math.pi / 6) == pytest.approx(quad_oracle(math.pi / 6), abs=1e-13)
    assert lob(math.pi / 6) == pytest.approx(0.5074708, abs=5e-8)


def test_maximum_at_pi_over_6():
    # L'(x) = -log|2 sin x| vanishes at pi/6
    xs = np.linspace(0.4, 0.65, 2001)
    assert abs(xs[np.argmax(lob_vec(xs))] - math.pi / 6) < 2e-4


def test_clausen_oracle():
    mpmath.mp.dps = 30
    for x in np.linspace(-4.0, 4.0, 97):
        assert lob(x) == pytest.approx(float(mpmath.clsin(2, 2 * x)) / 2, abs=1e-13)


def test_non_finite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(NonFiniteInput):
            lob(bad)


def test_oddness_periodicity_duplication():
    rng = np.random.default_rng(20260)
    xs = rng.uniform(-10.0, 10.0, 10_000)
    odd = max(abs(lob(-x) + lob(x)) for x in xs)
    per = max(abs(lob(x + math.pi) - lob(x)) for x in xs)
    dup = max(abs(lob(2 * x) - 2 * lob(x) - 2 * lob(x + math.pi / 2)) for x in xs)
    assert odd < 1e-13
    assert per < 1e-13
    assert dup < 1e-12


def test_quadrature_grid():
    xs = np.linspace(0.0, math.pi, 1000)
    err = max(abs(lob(x) - quad_oracle(x)) for x in xs)
    assert err < 1e-10


def test_near_multiples_of_pi():
    for k in (-3, 0, 1, 2):
        for eps in (1e-12, 1e-8, 1e-4):
            x = k * math.pi + eps
            assert lob(x) == pytest.approx(eps - eps * math.log(2 * eps), abs=1e-12)


def test_vectorized():
    xs = np.array([0.1, 1.0, 2.0])
    assert np.allclose(lob_vec(xs), [lob(x) for x in xs], atol=0)
