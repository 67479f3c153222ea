"""Group series, extensions and relation words."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .expr import Constraint, Expr
from .orbifold import OrbifoldSymbol, orbifold_chi, parameters


class ExtensionKind(Enum):
    REFLECTION = "Reflection"
    HALF_TURN = "HalfTurn"
    HALF_SCREW = "HalfScrew"
    POINT_REFLECTION = "PointReflection"
    ROTATORY_REFLECTION = "RotatoryReflection"
    GLIDE_REFLECTION = "GlideReflection"
    SCREW_MOTION = "ScrewMotion"


_TOKEN = re.compile(r"\s*(?:(\()|(\))\s*(?:\^\s*(\w+|\(\s*[^()]*\)))?|([A-Za-z]\w*)\s*(?:\^\s*(-?\w+))?)")


@dataclass(frozen=True)
class Relation:
    """A relator ``(g_1^{k_1} ... g_n^{k_n})^e = 1``.

    ``word`` is the base word as ``(generator, power)`` pairs and
    ``exponent`` the outer exponent, possibly parameter valued.
    """

    word: tuple
    exponent: Expr
    label: int | None = None
    text: str = ""

    @property
    def generators(self) -> frozenset:
        return frozenset(g for g, _ in self.word)

    def involution_of(self) -> str | None:
        """Name of ``g`` if this relation is ``g^2``."""
        if len(self.word) == 1 and self.word[0][1] == 1 and self.exponent.text.strip() == "2":
            return self.word[0][0]
        return None

    def __str__(self):
        lab = f"{self.label}: " if self.label is not None else ""
        return lab + self.text


def parse_relation(text: str, label: int | None = None) -> Relation:
    """Parse ``(m2 m3)^u``, ``m3 r m3 r^-1`` or ``r^3``.

    Inner parenthesised groups must carry integer exponents and are expanded.
    """
    pos, stack = 0, [[]]
    text = text.strip()
    outer = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse relation {text!r} at {text[pos:]!r}")
        pos = m.end()
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) < 2:
                raise ValueError(f"unbalanced ')' in relation {text!r}")
            group = stack.pop()
            exp = (m.group(3) or "1").strip()
            if exp.startswith("("):
                exp = exp[1:-1]
            if len(stack) == 1 and not stack[0] and pos >= len(text.rstrip()):
                outer = (group, exp)
            elif exp.lstrip("-").isdigit():
                stack[-1].extend(group * int(exp) if int(exp) > 0 else _invert(group) * -int(exp))
            else:
                raise ValueError(f"parameter exponent on an inner group in {text!r}")
        else:
            power = m.group(5) or "1"
            if power.lstrip("-").isdigit():
                stack[-1].append((m.group(4), int(power)))
            elif len(stack) == 1 and not stack[0] and m.end() >= len(text):
                outer = ([(m.group(4), 1)], power)
            else:
                raise ValueError(f"parameter power inside the word {text!r}")
    if len(stack) != 1:
        raise ValueError(f"unbalanced '(' in relation {text!r}")
    if outer is not None:
        word, exp = outer
    else:
        word, exp = stack[0], "1"
        if len(word) == 1 and word[0][1] > 1:
            word, exp = [(word[0][0], 1)], str(word[0][1])
    if not word:
        raise ValueError(f"empty relation {text!r}")
    return Relation(tuple(word), Expr(exp), label, text)


def _invert(word):
    return [(g, -k) for g, k in reversed(word)]


@dataclass(frozen=True)
class Extension:
    index: int
    kind: ExtensionKind
    new_generators: tuple
    involutions: frozenset
    new_relations: tuple
    vertex: str | None = None  # vertex class label such as "A0,A1"
    variant: bool = False  # alternative presentation of an earlier index

    @property
    def name(self) -> str:
        out = f"({self.index})" + ("'" if self.variant else "")
        return out + (f" for {self.vertex}" if self.vertex else "")


@dataclass(frozen=True)
class GroupSeries:
    id: str
    family: str
    orbifold_name: str
    crystallographic_name: str
    parameters: tuple
    constraints: tuple
    schlafli_rule: tuple | None  # three Expr or None
    generators: tuple
    involutions: frozenset
    relations: tuple
    extensions: tuple
    stabilizers: tuple  # ((vertex label, Conway template), ...)
    fundamental: bool = False
    source: str = field(default="", compare=False)

    @property
    def extension_count(self) -> int:
        """Number of extensions: product over vertex classes of the blocks per class."""
        blocks: dict = {}
        for e in self.extensions:
            blocks[e.vertex] = blocks.get(e.vertex, 0) + 1
        count = 1
        for n in blocks.values():
            count *= n
        return count if blocks else 0

    def stabilizer_symbols(self, values: dict) -> tuple:
        return tuple((lab, OrbifoldSymbol.parse(t, values)) for lab, t in self.stabilizers)

    def stabilizers_hyperbolic(self, values: dict) -> bool:
        return all(orbifold_chi(s) < 0 for _, s in self.stabilizer_symbols(values))


def validate_series(s: GroupSeries) -> list:
    """Structural diagnostics; an empty list means the series is well formed."""
    out = []
    params = set(s.parameters)
    for c in s.constraints:
        if not isinstance(c, Constraint):
            out.append(f"{s.id}: constraint {c!r} is not a comparison")
        elif not c.names <= params:
            out.append(f"{s.id}: constraint '{c}' uses undeclared {sorted(c.names - params)}")
    if s.schlafli_rule is not None:
        for e in s.schlafli_rule:
            if not e.names <= params:
                out.append(f"{s.id}: schlafli rule '{e}' uses undeclared {sorted(e.names - params)}")
    for lab, t in s.stabilizers:
        if not parameters(t) <= params:
            out.append(f"{s.id}: stabilizer {t} at {lab} uses undeclared {sorted(parameters(t) - params)}")
    out += _check_relations(s.id, "series", set(s.generators), s.involutions, s.relations, params)
    for e in s.extensions:
        where = f"extension {e.name}"
        clash = set(e.new_generators) & set(s.generators)
        if clash:
            out.append(f"{s.id}: {where} redeclares {sorted(clash)}")
        gens = set(s.generators) | set(e.new_generators)
        if not e.involutions <= set(e.new_generators):
            out.append(f"{s.id}: {where} flags undeclared involutions {sorted(e.involutions - set(e.new_generators))}")
        out += _check_relations(s.id, where, gens, e.involutions, e.new_relations, params)
        labels = [r.label for r in e.new_relations if r.label is not None]
        dup = sorted({x for x in labels if labels.count(x) > 1})
        if dup:
            out.append(f"{s.id}: {where} reuses relation labels {dup}")
    if not s.involutions <= set(s.generators):
        out.append(f"{s.id}: involutions {sorted(s.involutions - set(s.generators))} are not generators")
    return out


def _check_relations(sid, where, gens, invols, relations, params) -> list:
    out = []
    for r in relations:
        unknown = r.generators - gens
        if unknown:
            out.append(f"{sid}: {where} relation '{r.text}' uses undeclared {sorted(unknown)}")
        if not r.exponent.names <= params:
            out.append(f"{sid}: {where} relation '{r.text}' has exponent with undeclared {sorted(r.exponent.names - params)}")
    squared = {r.involution_of() for r in relations}
    for g in sorted(invols):
        if g not in squared:
            out.append(f"{sid}: {where} involution {g} has no relation {g}^2")
    return out
