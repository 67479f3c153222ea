"""Catalog of the extended space-group series of families F1-F4."""

from .catalog import (
    EXPECTED_COUNTS,
    FAMILIES,
    admissible_assignments,
    constraint_satisfied,
    family_counts,
    find_series,
    inequalities_satisfied,
    load_catalog,
    series_optimal_density,
    smallest_admissible,
    underlying_schlafli,
    validate_catalog,
)
from .expr import Constraint, Expr
from .model import Extension, ExtensionKind, GroupSeries, Relation, parse_relation, validate_series
from .orbifold import OrbifoldSymbol, area, area_over_pi, geometry, orbifold_chi
from .parser import parse_catalog_file, parse_catalog_text

__all__ = [
    "EXPECTED_COUNTS", "FAMILIES", "Constraint", "Expr", "Extension", "ExtensionKind",
    "GroupSeries", "OrbifoldSymbol", "Relation", "admissible_assignments", "area",
    "area_over_pi", "constraint_satisfied", "family_counts", "find_series", "geometry",
    "inequalities_satisfied", "load_catalog", "orbifold_chi", "parse_catalog_file",
    "parse_catalog_text", "parse_relation", "series_optimal_density", "smallest_admissible",
    "underlying_schlafli", "validate_catalog", "validate_series",
]
