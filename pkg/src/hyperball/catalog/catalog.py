"""Loading and querying the catalog of extended space-group series."""

from __future__ import annotations

import itertools
from functools import lru_cache
from importlib import resources

from ..errors import CountMismatch, EmptyAdmissibleSet, MissingParameter, RuleMissing
from ..schlafli import Realizability, SchlafliSymbol, realizability
from .model import GroupSeries, validate_series
from .parser import parse_catalog_text

FAMILIES = ("F1", "F2", "F3", "F4")
EXPECTED_COUNTS = {"F1": 14, "F2": 21, "F3": 17, "F4": 21}


@lru_cache(maxsize=None)
def _load(check_counts: bool) -> tuple:
    series = []
    data = resources.files(__package__) / "data"
    for fam in FAMILIES:
        path = data / f"{fam}.cat"
        declared, items = parse_catalog_text(path.read_text(encoding="utf-8"), f"{fam}.cat")
        if declared != fam:
            raise CountMismatch(f"{fam}.cat declares family {declared}")
        series.extend(items)
    result = tuple(series)
    if check_counts:
        counts = family_counts(result)
        if counts != EXPECTED_COUNTS:
            raise CountMismatch(f"extension counts {counts} differ from {EXPECTED_COUNTS}")
    return result


def load_catalog(check_counts: bool = True) -> tuple:
    """All group series of F1-F4, including the fundamental repetition blocks.

    Raises
    ------
    ParseError
        On malformed data, with file and line.
    CountMismatch
        If the per-family extension counts are not 14, 21, 17, 21.
    """
    return _load(check_counts)


def family_counts(series) -> dict:
    counts = {fam: 0 for fam in FAMILIES}
    for s in series:
        if not s.fundamental:
            counts[s.family] += s.extension_count
    return counts


def find_series(series_id: str) -> GroupSeries:
    for s in load_catalog():
        if s.id == series_id:
            return s
    raise KeyError(f"no series {series_id!r}")


def validate_catalog() -> list:
    out = []
    for s in load_catalog():
        out.extend(validate_series(s))
    return out


def _values(s: GroupSeries, values: dict) -> dict:
    missing = [p for p in s.parameters if p not in values]
    if missing:
        raise MissingParameter(f"{s.id} needs parameters {missing}")
    return {p: values[p] for p in s.parameters}


def constraint_satisfied(s: GroupSeries, values: dict) -> bool:
    """True iff every printed clause of ``s`` holds, in exact rationals."""
    vals = _values(s, values)
    return all(c(vals) for c in s.constraints)


def inequalities_satisfied(s: GroupSeries, values: dict) -> bool:
    """Only the order clauses; ``!=`` clauses separate families, not geometry."""
    vals = _values(s, values)
    return all(c(vals) for c in s.constraints if c.is_inequality)


def underlying_schlafli(s: GroupSeries, values: dict) -> SchlafliSymbol:
    if s.schlafli_rule is None:
        raise RuleMissing(f"no Schlafli rule stored for {s.id}")
    vals = _values(s, values)
    params = []
    for e in s.schlafli_rule:
        x = e(vals)
        if x.denominator != 1:
            raise ValueError(f"{s.id}: rule {e} gives non-integer {x}")
        params.append(int(x))
    return SchlafliSymbol(*params)


def admissible_assignments(s: GroupSeries, max_param: int, min_param: int = 1):
    """Assignments with each parameter in range that satisfy all clauses.

    Yields in order of increasing parameter sum, then lexicographically.
    """
    rng = range(min_param, max_param + 1)
    combos = sorted(itertools.product(rng, repeat=len(s.parameters)), key=lambda t: (sum(t), t))
    for combo in combos:
        values = dict(zip(s.parameters, combo))
        if constraint_satisfied(s, values):
            yield values


def smallest_admissible(s: GroupSeries, max_param: int = 50) -> dict:
    """Admissible assignment of least parameter sum, ties lexicographic."""
    for values in admissible_assignments(s, max_param):
        sym = underlying_schlafli(s, values)
        if realizability(sym) is Realizability.COMPACT_TRUNC_HYPERBOLIC:
            return values
    raise EmptyAdmissibleSet(f"no admissible parameters for {s.id} up to {max_param}")


def series_optimal_density(s: GroupSeries, mode, max_param: int = 20):
    """Best density over the series' admissible parameters.

    Returns
    -------
    tuple
        ``(values, DensityReport)`` where ``values`` are the series parameters.
    """
    from ..density import Mode, preferred, density

    mode = Mode.parse(mode)
    best = None
    for values in admissible_assignments(s, max_param):
        sym = underlying_schlafli(s, values)
        if realizability(sym) is not Realizability.COMPACT_TRUNC_HYPERBOLIC:
            continue
        rep = density(s.family, sym, mode)
        if best is None or preferred(rep, best[1], mode):
            best = (values, rep)
    if best is None:
        raise EmptyAdmissibleSet(f"no admissible parameters for {s.id} up to {max_param}")
    return best
