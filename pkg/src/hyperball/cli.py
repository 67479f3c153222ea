"""Command-line front end.

Usage errors exit with status 2, computation errors with status 1 after
printing the error class name.  Output is deterministic; the only
variable line is the version banner, which ``--no-banner`` removes.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from . import __version__
from .catalog import (
    FAMILIES,
    family_counts,
    find_series,
    load_catalog,
    smallest_admissible,
    underlying_schlafli,
    validate_catalog,
)
from .density import density, generate_table, optimize, table_id
from .errors import HyperballError
from .golden import CELL_TOL, COLUMNS, GOLDEN, adjudicate_f2_covering, compare_rows
from .isometry import PASS_TOL, check_orthoscheme
from .lobachevsky import lob
from .metric import Family, covering_candidates, packing_candidates
from .schlafli import SchlafliSymbol, build_gram, classify_vertices, invert_gram, realizability
from .volume import orthoscheme_volume


def _symbol(text: str) -> SchlafliSymbol:
    try:
        return SchlafliSymbol.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _table(text: str) -> str:
    try:
        return table_id(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperball", description="Hyperball packings and coverings of truncated orthoschemes.")
    p.add_argument("--precision", type=int, default=5, help="decimals for printed reals (default 5)")
    p.add_argument("--tol", type=float, default=None, help="comparison tolerance (command specific default)")
    p.add_argument("--no-banner", action="store_true", help="suppress the version banner")
    sub = p.add_subparsers(dest="command", required=True)

    orth = sub.add_parser("orthoscheme", help="Gram data and volume of an orthoscheme")
    orth_sub = orth.add_subparsers(dest="action", required=True)
    info = orth_sub.add_parser("info")
    info.add_argument("--schlafli", type=_symbol, required=True)

    lp = sub.add_parser("lob", help="Lobachevsky function")
    lp.add_argument("--x", type=float, required=True)

    hp = sub.add_parser("heights", help="packing and covering heights")
    hp.add_argument("--family", type=_family, required=True)
    hp.add_argument("--schlafli", type=_symbol, required=True)

    dp = sub.add_parser("density", help="density of one symbol")
    dp.add_argument("mode", choices=("pack", "cover"))
    dp.add_argument("--family", type=_family, required=True)
    dp.add_argument("--schlafli", type=_symbol, required=True)

    tp = sub.add_parser("tables", help="recompute a density table")
    tp.add_argument("--which", type=_table, required=True, help="1p, 1c, 2p, 2c, 3p or 4p")
    tp.add_argument("--format", choices=("csv", "md"), default="csv")
    tp.add_argument("--compare-paper", action="store_true", help="diff against the printed values")

    op = sub.add_parser("optimize", help="best density over a parameter range")
    op.add_argument("mode", choices=("pack", "cover"))
    op.add_argument("--family", type=_family, required=True)
    op.add_argument("--max-param", type=int, required=True)

    cp = sub.add_parser("catalog", help="extended space-group series")
    cat_sub = cp.add_subparsers(dest="action", required=True)
    cl = cat_sub.add_parser("list")
    cl.add_argument("--family", choices=FAMILIES)
    cs = cat_sub.add_parser("show")
    cs.add_argument("--series", required=True)
    cat_sub.add_parser("validate")

    rp = sub.add_parser("relators", help="numeric relator checks")
    rel_sub = rp.add_subparsers(dest="action", required=True)
    rc = rel_sub.add_parser("check")
    rc.add_argument("--schlafli", type=_symbol, required=True)
    rc.add_argument("--with-polar", action="store_true")
    return p


class _Usage(Exception):
    pass


class _Out:
    def __init__(self, precision: int):
        self.buf = io.StringIO()
        self.prec = precision

    def f(self, x) -> str:
        return f"{x:.{self.prec}f}"

    def line(self, text: str = "") -> None:
        self.buf.write(text + "\n")


def _orthoscheme_info(args, out: _Out) -> int:
    sym = args.schlafli
    g = build_gram(sym)
    out.line(f"schlafli {{{sym}}}")
    out.line("gram")
    for row in g.entries:
        out.line("  " + "  ".join(f"{x: .{out.prec}f}" for x in row))
    out.line(f"det {g.determinant:.{out.prec}e}")
    out.line(f"realizability {realizability(sym).value}")
    classes = classify_vertices(invert_gram(g))
    out.line("vertices " + " ".join(f"A{i}:{c.value}" for i, c in enumerate(classes)))
    vb = orthoscheme_volume(sym)
    out.line(f"theta {out.f(vb.theta)}")
    out.line(f"volume {out.f(vb.volume)}")
    return 0


def _heights(args, out: _Out) -> int:
    fam, sym = args.family, args.schlafli
    pc = packing_candidates(fam, sym)
    out.line(f"{fam.value} {{{sym}}}")
    for k, v in pc.items():
        out.line(f"  packing candidate {k} = {out.f(v)}")
    out.line(f"h_p {out.f(min(pc.values()))}")
    if fam in (Family.F1, Family.F2):
        cc = covering_candidates(fam, sym)
        for k, v in cc.items():
            out.line(f"  covering candidate {k} = {out.f(v)}")
        out.line(f"h_c {out.f(min(cc.values()))}")
    return 0


def _density(args, out: _Out) -> int:
    rep = density(args.family, args.schlafli, args.mode)
    out.line(f"{rep.family.value} {rep.mode.value.lower()} {{{rep.sym}}}")
    out.line(f"h {out.f(rep.height)}")
    out.line(f"vol_orthoscheme {out.f(rep.orthoscheme_volume)}")
    for i, v in rep.piece_volumes:
        out.line(f"vol_piece_A{i} {out.f(v)}")
    out.line(f"vol_pieces {out.f(rep.pieces_volume)}")
    out.line(f"density {out.f(rep.density)}")
    return 0


def _tables(args, out: _Out) -> int:
    which = args.which
    rows = generate_table(which)
    header = ("params",) + COLUMNS
    body = [(f"{{{r.sym}}}",) + tuple(out.f(x) for x in r.values) for r in rows]
    if args.format == "csv":
        s = io.StringIO()
        w = csv.writer(s, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
        w.writerow(header)
        w.writerows(body)
        out.buf.write(s.getvalue())
    else:
        out.line("| " + " | ".join(header) + " |")
        out.line("|" + "|".join(["---"] + ["---:"] * len(COLUMNS)) + "|")
        for b in body:
            out.line("| " + " | ".join(b) + " |")
    if not args.compare_paper:
        return 0
    tol = CELL_TOL if args.tol is None else args.tol
    diffs = compare_rows(which, rows)
    out.line()
    out.line(f"compare {which} tol {tol:g}")
    for d in diffs:
        status = "ok" if d.error <= tol else ("SUSPECT" if d.suspect else "FAIL")
        out.line(f"  {{{d.sym}}} {d.column}: printed {d.printed:.5f} computed {d.computed:.5f} diff {d.error:.1e} {status}")
    for g in GOLDEN[which]:
        if g.suspect:
            out.line(f"  suspect row {{{g.sym}}} excluded: {g.note}")
    if which == "T2c":
        first = next(r for r in rows if r.sym == SchlafliSymbol(7, 3, 7))
        out.line("  optimal F2 covering: " + adjudicate_f2_covering(first.density))
    bad = [d for d in diffs if d.error > tol and not d.suspect]
    out.line(f"{len(bad)} failing cells")
    return 1 if bad else 0


def _optimize(args, out: _Out) -> int:
    sym, rep = optimize(args.family, args.mode, args.max_param)
    out.line(f"({sym}), {out.f(rep.density)}")
    out.line(f"h {out.f(rep.height)}")
    if args.family is Family.F2 and rep.mode.value == "Covering":
        out.line(adjudicate_f2_covering(rep.density))
    return 0


def _catalog(args, out: _Out) -> int:
    if args.action == "list":
        for s in load_catalog():
            if args.family and s.family != args.family:
                continue
            tag = " fundamental" if s.fundamental else ""
            out.line(f"{s.family} {s.id:8s} {s.orbifold_name:24s} extensions {s.extension_count}{tag}")
        return 0
    if args.action == "show":
        try:
            s = find_series(args.series)
        except KeyError as exc:
            raise _Usage(exc.args[0]) from None
        out.line(f"series {s.id} ({s.family})")
        out.line(f"orbifold {s.orbifold_name}")
        out.line(f"cryst {s.crystallographic_name}")
        out.line(f"params {' '.join(s.parameters)}")
        for c in s.constraints:
            out.line(f"constraint {c}")
        if s.schlafli_rule:
            out.line("schlafli " + ", ".join(str(e) for e in s.schlafli_rule))
        out.line(f"generators {' '.join(s.generators)}")
        for r in s.relations:
            out.line(f"  {r}")
        for lab, t in s.stabilizers:
            out.line(f"stabilizer {lab} {t}")
        for e in s.extensions:
            out.line(f"extension {e.name} {e.kind.value}: {' '.join(e.new_generators)}")
            for r in e.new_relations:
                out.line(f"  {r}")
        out.line(f"extension count {s.extension_count}")
        try:
            vals = smallest_admissible(s)
            sym = underlying_schlafli(s, vals)
            out.line(f"smallest admissible {vals} -> {{{sym}}}")
        except HyperballError as exc:
            out.line(f"smallest admissible: {type(exc).__name__}")
        return 0
    diags = validate_catalog()
    for d in diags:
        out.line(d)
    if diags:
        out.line(f"{len(diags)} diagnostics")
        return 1
    total = sum(family_counts(load_catalog()).values())
    out.line(f"{total} series OK")
    return 0


def _relators(args, out: _Out) -> int:
    tol = PASS_TOL if args.tol is None else args.tol
    results = check_orthoscheme(args.schlafli, args.with_polar)
    bad = 0
    for r in results:
        ok = r.passed(tol)
        bad += not ok
        out.line(f"{'PASS' if ok else 'FAIL'} {r.relation:16s} residual {r.residual:.2e}")
    out.line(f"{len(results) - bad}/{len(results)} relators pass at tol {tol:g}")
    return 1 if bad else 0


_DISPATCH = {
    "orthoscheme": _orthoscheme_info,
    "lob": lambda a, o: (o.line(o.f(lob(a.x))), 0)[1],
    "heights": _heights,
    "density": _density,
    "tables": _tables,
    "optimize": _optimize,
    "catalog": _catalog,
    "relators": _relators,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.precision < 0:
        stderr.write("error: --precision must be non-negative\n")
        return 2
    out = _Out(args.precision)
    if not args.no_banner:
        out.line(f"# hyperball {__version__}")
    try:
        with np.errstate(all="ignore"):
            code = _DISPATCH[args.command](args, out)
    except _Usage as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except HyperballError as exc:
        stdout.write(out.buf.getvalue())
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    stdout.write(out.buf.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
