"""Parameter expressions and inequality clauses over exact rationals.

Expressions use the notation of group presentations: ``2u``, ``1/u + 2/v``,
``3/2``.  A juxtaposed coefficient binds tighter than ``/``, so ``2/3v``
is not accepted; write ``2/(3v)``.
"""

from __future__ import annotations

import ast
import operator
import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import MissingParameter

_COEF = re.compile(r"(\d)\s*([A-Za-z_(])")

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_CMPOPS = {
    ast.Lt: ("<", operator.lt),
    ast.LtE: ("<=", operator.le),
    ast.Gt: (">", operator.gt),
    ast.GtE: (">=", operator.ge),
    ast.Eq: ("==", operator.eq),
    ast.NotEq: ("!=", operator.ne),
}


def _normalize(text: str) -> str:
    text = text.replace("≠", "!=").replace("≤", "<=").replace("≥", ">=")
    return _COEF.sub(r"\1*\2", text)


def _check_node(node, names: set):
    if isinstance(node, ast.Expression):
        _check_node(node.body, names)
    elif isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        _check_node(node.left, names)
        _check_node(node.right, names)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        _check_node(node.operand, names)
    elif isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        pass
    elif isinstance(node, ast.Name):
        names.add(node.id)
    elif isinstance(node, ast.Compare):
        _check_node(node.left, names)
        for op, comp in zip(node.ops, node.comparators):
            if type(op) not in _CMPOPS:
                raise ValueError(f"unsupported comparison {type(op).__name__}")
            _check_node(comp, names)
    else:
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")


def _eval(node, values: dict) -> Fraction:
    if isinstance(node, ast.Expression):
        return _eval(node.body, values)
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_eval(node.left, values), _eval(node.right, values))
    if isinstance(node, ast.UnaryOp):
        return -_eval(node.operand, values)
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        try:
            return Fraction(values[node.id])
        except KeyError:
            raise MissingParameter(f"parameter {node.id!r} is not assigned") from None
    raise TypeError(node)


@dataclass(frozen=True)
class Expr:
    """An arithmetic expression in named parameters."""

    text: str

    def __post_init__(self):
        tree = ast.parse(_normalize(self.text), mode="eval")
        names: set = set()
        _check_node(tree, names)
        if isinstance(tree.body, ast.Compare):
            raise ValueError(f"expected an expression, got a comparison: {self.text!r}")
        object.__setattr__(self, "_tree", tree)
        object.__setattr__(self, "names", frozenset(names))

    def __call__(self, values: dict) -> Fraction:
        return _eval(self._tree, values)

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class Constraint:
    """A comparison chain such as ``6 < u`` or ``1/u + 1/v < 1/2``."""

    text: str

    def __post_init__(self):
        tree = ast.parse(_normalize(self.text), mode="eval")
        if not isinstance(tree.body, ast.Compare):
            raise ValueError(f"not a comparison: {self.text!r}")
        names: set = set()
        _check_node(tree, names)
        object.__setattr__(self, "_tree", tree)
        object.__setattr__(self, "names", frozenset(names))

    @property
    def operators(self) -> tuple:
        return tuple(_CMPOPS[type(op)][0] for op in self._tree.body.ops)

    @property
    def is_inequality(self) -> bool:
        """True for order comparisons; ``!=`` and ``==`` clauses are not."""
        return all(op in ("<", "<=", ">", ">=") for op in self.operators)

    def __call__(self, values: dict) -> bool:
        cmp = self._tree.body
        left = _eval(cmp.left, values)
        for op, comp in zip(cmp.ops, cmp.comparators):
            right = _eval(comp, values)
            if not _CMPOPS[type(op)][1](left, right):
                return False
            left = right
        return True

    def __str__(self):
        return self.text
