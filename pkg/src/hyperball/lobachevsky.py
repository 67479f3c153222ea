"""Lobachevsky function ``L(x) = -int_0^x log|2 sin t| dt``.

``L`` is odd and pi-periodic, so every argument is first reduced to
``[0, pi/2]``.  On that range ``2x <= pi`` and the expansion

    L(x) = x - x log(2x) + x * sum_k zeta(2k)/(k (2k+1)) (x/pi)^(2k)

converges at least like ``4**-k``.  The leading ``x - x log 2x`` part is the
exact integral of ``-log(2t)``, which carries the logarithmic singularity at
the origin, so no special handling is needed near multiples of pi.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import zeta

from .errors import NonFiniteInput

_N_TERMS = 32

# zeta(2k) / (k (2k+1)), k = 1.._N_TERMS
_COEFFS = tuple(
    float(zeta(2 * k)) / (k * (2 * k + 1)) for k in range(1, _N_TERMS + 1)
)


def _lob_reduced(y: float) -> float:
    # 0 < y <= pi/2
    t = (y / math.pi) ** 2
    terms = [y, -y * math.log(2.0 * y)]
    power = 1.0
    for c in _COEFFS:
        power *= t
        term = y * c * power
        terms.append(term)
        if term < 1e-18:
            break
    return math.fsum(terms)


def lob(x: float) -> float:
    """Evaluate the Lobachevsky function.

    Parameters
    ----------
    x : float
        Angle in radians.

    Returns
    -------
    float
        ``L(x)`` with absolute error below ``1e-12``.

    Raises
    ------
    NonFiniteInput
        If ``x`` is NaN or infinite.
    """
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteInput(f"Lobachevsky function needs a finite angle, got {x}")
    y = math.remainder(x, math.pi)
    sign = 1.0
    if y < 0.0:
        sign, y = -1.0, -y
    if y == 0.0:
        return 0.0
    return sign * _lob_reduced(y)


lob_vec = np.vectorize(lob, otypes=[float])
