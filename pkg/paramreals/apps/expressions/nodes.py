"""
Syntax trees of real expressions.

Nodes are frozen, so structurally equal subterms are equal and hash
alike; the dag strategy shares them through that.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import FrozenSet, Union

from paramreals.apps.functions.generators import INTERVAL_FUNCTIONS

SQRT = "sqrt"
FUNCTION_NAMES = frozenset([SQRT, *INTERVAL_FUNCTIONS])

OPERATORS = ("+", "-", "*")


@dataclass(frozen=True)
class Number:
    """numerator/denominator; a zero denominator is only rejected when evaluated"""

    numerator: int
    denominator: int = 1


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr

    def __post_init__(self):
        if self.op not in OPERATORS:
            raise ValueError(f"Unknown operator {self.op!r}")


@dataclass(frozen=True)
class Lambda:
    parameter: str
    body: Expr


@dataclass(frozen=True)
class Apply:
    function: Union[str, Lambda]
    argument: Expr

    def __post_init__(self):
        if isinstance(self.function, str) and self.function not in FUNCTION_NAMES:
            raise ValueError(f"Unknown function {self.function!r}")


@dataclass(frozen=True)
class Iterate:
    function: Lambda
    count: int
    seed: Expr

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("Iteration counts are natural numbers")


Expr = Union[Number, Variable, Neg, BinOp, Apply, Iterate]


@functools.lru_cache(maxsize=None)
def free_variables(expr) -> FrozenSet[str]:
    if isinstance(expr, Number):
        return frozenset()
    if isinstance(expr, Variable):
        return frozenset([expr.name])
    if isinstance(expr, Neg):
        return free_variables(expr.operand)
    if isinstance(expr, BinOp):
        return free_variables(expr.left) | free_variables(expr.right)
    if isinstance(expr, Lambda):
        return free_variables(expr.body) - {expr.parameter}
    if isinstance(expr, Apply):
        inner = frozenset() if isinstance(expr.function, str) else free_variables(expr.function)
        return inner | free_variables(expr.argument)
    if isinstance(expr, Iterate):
        return free_variables(expr.function) | free_variables(expr.seed)
    raise TypeError(f"{expr!r} is not an expression")


def expression_size(expr) -> int:
    """Number of nodes, lambdas included and iterations not unrolled"""
    if isinstance(expr, (Number, Variable)):
        return 1
    if isinstance(expr, Neg):
        return 1 + expression_size(expr.operand)
    if isinstance(expr, BinOp):
        return 1 + expression_size(expr.left) + expression_size(expr.right)
    if isinstance(expr, Lambda):
        return 1 + expression_size(expr.body)
    if isinstance(expr, Apply):
        inner = 0 if isinstance(expr.function, str) else expression_size(expr.function)
        return 1 + inner + expression_size(expr.argument)
    if isinstance(expr, Iterate):
        return 1 + expression_size(expr.function) + expression_size(expr.seed)
    raise TypeError(f"{expr!r} is not an expression")


__all__ = [
    "SQRT",
    "FUNCTION_NAMES",
    "OPERATORS",
    "Number",
    "Variable",
    "Neg",
    "BinOp",
    "Lambda",
    "Apply",
    "Iterate",
    "Expr",
    "free_variables",
    "expression_size",
]
