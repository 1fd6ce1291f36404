"""
Reference expressions, each with the bindings it needs.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .nodes import BinOp, Iterate, Lambda, Number, Variable
from .parser import parse

LOGISTIC_BODY = BinOp(
    "*", BinOp("*", Variable("r"), Variable("x")), BinOp("-", Number(1), Variable("x"))
)
LOGISTIC_RATE = Number(7, 2)
LOGISTIC_SEED = Number(1, 2)


def logistic_program(iterations: int, seed: Number = LOGISTIC_SEED) -> Iterate:
    """x_{i+1} = r·x_i·(1 - x_i), with r left free"""
    return Iterate(Lambda("x", LOGISTIC_BODY), iterations, seed)


def logistic_bindings(rate: Number = LOGISTIC_RATE) -> Dict:
    return {"r": rate}


@dataclass(frozen=True)
class ExpressionEntry:
    label: str
    text: str
    bindings: Tuple[Tuple[str, str], ...] = ()

    def expr(self):
        return parse(self.text)

    def env(self) -> Dict:
        return {variable: parse(value) for variable, value in self.bindings}


def expression_corpus() -> List[ExpressionEntry]:
    return [
        ExpressionEntry("one", "1/2 * 2"),
        ExpressionEntry("thirds", "1/3 + 1/3 + 1/3"),
        ExpressionEntry("mixed", "(1/3 - 1/2) * 7/8"),
        ExpressionEntry("negation", "-(1/3) * -3"),
        ExpressionEntry("sqrt(2)-1", "apply(sqrt, 2) - 1"),
        ExpressionEntry("square-root-squared", "apply(square, apply(sqrt, 1/2))"),
        ExpressionEntry("lambda", "apply(x -> x*x - 2, 3/2)"),
        ExpressionEntry("named", "apply(flip, 7/8) + apply(half, 1/3) * apply(logistic, 1/3)"),
        ExpressionEntry("logistic-8", "iterate(x -> r*x*(1-x), 8, 1/2)", (("r", "7/2"),)),
        ExpressionEntry("logistic-third", "iterate(x -> r*x*(1-x), 6, 1/3)", (("r", "3"),)),
        ExpressionEntry("scaled", "iterate(y -> y*s + 1/5, 4, 0)", (("s", "1/3"),)),
    ]


__all__ = [
    "LOGISTIC_BODY",
    "LOGISTIC_RATE",
    "LOGISTIC_SEED",
    "logistic_program",
    "logistic_bindings",
    "ExpressionEntry",
    "expression_corpus",
]
