"""Reader for the line-oriented catalog data files (see ``data/FORMAT.md``)."""

from __future__ import annotations

from pathlib import Path

from ..errors import ParseError
from .expr import Constraint, Expr
from .model import Extension, ExtensionKind, GroupSeries, parse_relation

FORMAT_VERSION = 1

_SERIES_KEYS = {"orbifold", "cryst", "params", "constraint", "schlafli", "gens", "invol", "rel", "stabilizer", "fundamental", "ext"}
_EXT_KEYS = {"gens", "invol", "rel"}


def _split_rel(rest: str):
    head, sep, tail = rest.partition(":")
    if sep and head.strip().isdigit():
        return int(head), tail.strip()
    return None, rest.strip()


class _Builder:
    def __init__(self, sid, family, path, line):
        self.id, self.family, self.path, self.line = sid, family, path, line
        self.fields = {"orbifold": "", "cryst": "", "params": (), "constraints": [], "schlafli": None,
                       "gens": [], "invol": set(), "rel": [], "stabilizers": [], "fundamental": False}
        self.exts: list = []

    def build(self) -> GroupSeries:
        f = self.fields
        exts = tuple(
            Extension(e["index"], e["kind"], tuple(e["gens"]), frozenset(e["invol"]), tuple(e["rel"]), e["vertex"], e["variant"])
            for e in self.exts
        )
        return GroupSeries(
            self.id, self.family, f["orbifold"], f["cryst"], tuple(f["params"]), tuple(f["constraints"]),
            f["schlafli"], tuple(f["gens"]), frozenset(f["invol"]), tuple(f["rel"]), exts,
            tuple(f["stabilizers"]), f["fundamental"], f"{self.path}:{self.line}",
        )


def parse_catalog_text(text: str, path: str = "<string>") -> tuple:
    """Parse one family file; returns ``(family, [GroupSeries, ...])``."""
    family = None
    series: list = []
    cur: _Builder | None = None
    ext = None
    seen_version = False

    def fail(msg, n):
        raise ParseError(msg, path, n)

    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip(" "))
        key, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        try:
            if indent == 0:
                if key == "catalog-format":
                    if rest != str(FORMAT_VERSION):
                        fail(f"unsupported catalog format {rest!r}", n)
                    seen_version = True
                elif not seen_version:
                    fail("file must start with 'catalog-format 1'", n)
                elif key == "family":
                    family = rest
                elif key == "series":
                    if family is None:
                        fail("series before family", n)
                    if not rest:
                        fail("series needs an id", n)
                    if cur:
                        series.append(cur.build())
                    cur, ext = _Builder(rest, family, path, n), None
                else:
                    fail(f"unknown top-level key {key!r}", n)
            elif indent == 2:
                if cur is None:
                    fail(f"{key!r} outside a series", n)
                if key not in _SERIES_KEYS:
                    fail(f"unknown series key {key!r}", n)
                ext = None
                f = cur.fields
                if key == "orbifold":
                    f["orbifold"] = rest
                elif key == "cryst":
                    f["cryst"] = rest
                elif key == "params":
                    f["params"] = tuple(rest.split())
                elif key == "constraint":
                    f["constraints"].append(Constraint(rest))
                elif key == "schlafli":
                    parts = [p.strip() for p in rest.split(",")]
                    if len(parts) != 3:
                        fail("schlafli rule needs three expressions", n)
                    f["schlafli"] = tuple(Expr(p) for p in parts)
                elif key == "gens":
                    f["gens"].extend(rest.split())
                elif key == "invol":
                    f["invol"].update(rest.split())
                elif key == "rel":
                    f["rel"].append(parse_relation(*reversed(_split_rel(rest))))
                elif key == "stabilizer":
                    lab, _, sym = rest.partition(" ")
                    if not sym.strip():
                        fail("stabilizer needs '<vertex> <symbol>'", n)
                    f["stabilizers"].append((lab, sym.strip()))
                elif key == "fundamental":
                    f["fundamental"] = True
                elif key == "ext":
                    words = rest.split()
                    if len(words) < 2 or not words[0].isdigit():
                        fail("ext needs '<index> <Kind>'", n)
                    vertex, variant = None, False
                    tail = words[2:]
                    while tail:
                        w = tail.pop(0)
                        if w == "vertex" and tail:
                            vertex = tail.pop(0)
                        elif w == "variant":
                            variant = True
                        else:
                            fail(f"unexpected ext word {w!r}", n)
                    ext = {"index": int(words[0]), "kind": ExtensionKind(words[1]), "gens": [], "invol": set(),
                           "rel": [], "vertex": vertex, "variant": variant}
                    cur.exts.append(ext)
            elif indent == 4:
                if ext is None:
                    fail(f"{key!r} outside an ext block", n)
                if key not in _EXT_KEYS:
                    fail(f"unknown ext key {key!r}", n)
                if key == "gens":
                    ext["gens"].extend(rest.split())
                elif key == "invol":
                    ext["invol"].update(rest.split())
                else:
                    ext["rel"].append(parse_relation(*reversed(_split_rel(rest))))
            else:
                fail(f"bad indentation ({indent} spaces)", n)
        except ParseError:
            raise
        except (ValueError, SyntaxError) as exc:
            fail(str(exc), n)
    if cur:
        series.append(cur.build())
    if family is None:
        raise ParseError("no family declared", path, 0)
    return family, series


def parse_catalog_file(path) -> tuple:
    path = Path(path)
    return parse_catalog_text(path.read_text(encoding="utf-8"), str(path))
