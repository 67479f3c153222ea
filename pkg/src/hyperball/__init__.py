"""Hyperball packings and coverings of truncated hyperbolic Coxeter orthoschemes."""

__version__ = "0.1.0"

from .density import (
    DensityReport,
    Mode,
    TableRow,
    admissible,
    admissible_symbols,
    covering_density,
    density,
    generate_table,
    half_hyperball_volume,
    optimize,
    packing_density,
    truncation_area,
)
from .errors import *  # noqa: F401,F403
from .isometry import Isometry, check_orthoscheme, polar_reflection, reflection, verify_relator, verify_series
from .lobachevsky import lob, lob_vec
from .metric import (
    Family,
    TruncOrthoscheme,
    covering_candidates,
    covering_height,
    dist_plane_plane,
    dist_point_plane,
    dist_point_point,
    packing_candidates,
    packing_height,
)
from .schlafli import (
    INF,
    CoMetric,
    GramMatrix,
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
from .volume import orthoscheme_volume, theta, volume
