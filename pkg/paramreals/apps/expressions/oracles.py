"""
Exact values of expressions, computed with big rationals and no rounding.

Rational expressions get their exact value. Square roots of non-squares
are enclosed between integer square roots on a fine grid, and everything
downstream of them carries a rational enclosure instead.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import gmpy2
from gmpy2 import mpq, mpz

from paramreals.apps.core.exceptions import DomainError, ScopeError
from paramreals.apps.core.intervals import DyadicInterval

from .nodes import SQRT, Apply, BinOp, Iterate, Lambda, Neg, Number, Variable

logger = logging.getLogger(__name__)

ORACLE_BITS = 256


@dataclass(frozen=True)
class Enclosure:
    lower: mpq
    upper: mpq

    @classmethod
    def exactly(cls, value) -> Enclosure:
        value = mpq(value)
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __add__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lower + other.lower, self.upper + other.upper)

    def __sub__(self, other: Enclosure) -> Enclosure:
        return Enclosure(self.lower - other.upper, self.upper - other.lower)

    def __neg__(self) -> Enclosure:
        return Enclosure(-self.upper, -self.lower)

    def __mul__(self, other: Enclosure) -> Enclosure:
        if self.is_exact and other.is_exact:
            return Enclosure.exactly(self.lower * other.lower)
        products = [a * b for a in (self.lower, self.upper) for b in (other.lower, other.upper)]
        return Enclosure(min(products), max(products))

    def clamped(self, low=0, high=1) -> Enclosure:
        low, high = mpq(low), mpq(high)
        return Enclosure(min(max(self.lower, low), high), min(max(self.upper, low), high))

    def sqrt(self, bits: int) -> Enclosure:
        if self.upper < 0:
            raise DomainError(f"No real square root of {self.upper}")
        if self.is_exact and _is_rational_square(self.lower):
            root = mpq(gmpy2.isqrt(self.lower.numerator), gmpy2.isqrt(self.lower.denominator))
            return Enclosure.exactly(root)
        lower = _sqrt_floor(self.lower, bits) if self.lower > 0 else mpq(0)
        return Enclosure(lower, _sqrt_ceil(self.upper, bits))

    def consistent_with(self, J: DyadicInterval) -> bool:
        """J contains the exact value, or meets the enclosure when the value is not exact"""
        if not J.is_finite:
            return True
        lower, upper = J.lower.as_mpq(), J.upper.as_mpq()
        return lower <= self.upper and self.lower <= upper

    def __str__(self):
        if self.is_exact:
            return str(self.lower)
        return f"[{self.lower}, {self.upper}]"


def _is_rational_square(value) -> bool:
    return value >= 0 and gmpy2.is_square(value.numerator) and gmpy2.is_square(value.denominator)


def _sqrt_floor(value, bits: int) -> mpq:
    scaled = gmpy2.f_div(value.numerator << (2 * bits), value.denominator)
    return mpq(gmpy2.isqrt(scaled), mpz(1) << bits)


def _sqrt_ceil(value, bits: int) -> mpq:
    scaled = gmpy2.c_div(value.numerator << (2 * bits), value.denominator)
    root, remainder = gmpy2.isqrt_rem(scaled)
    return mpq(root if remainder == 0 else root + 1, mpz(1) << bits)


def _polynomial(*coefficients) -> Callable[[Enclosure], Enclosure]:
    """c0 + c1·x + c2·x² + ... on the clamped argument"""

    def evaluate(x: Enclosure) -> Enclosure:
        x = x.clamped()
        result = Enclosure.exactly(0)
        power = Enclosure.exactly(1)
        for c in coefficients:
            result = result + Enclosure.exactly(c) * power
            power = power * x
        return result

    return evaluate


def _logistic(x: Enclosure) -> Enclosure:
    x = x.clamped()
    return Enclosure.exactly(4) * x * (Enclosure.exactly(1) - x)


FORMULAS: Dict[str, Callable[[Enclosure], Enclosure]] = {
    "id": _polynomial(0, 1),
    "half": _polynomial(0, mpq(1, 2)),
    "flip": _polynomial(1, -1),
    "square": lambda x: x.clamped() * x.clamped(),
    "logistic": _logistic,
    "slow": _polynomial(0, 1),
}


class ExactEvaluator:
    def __init__(self, bits: int = ORACLE_BITS):
        self.bits = bits

    def value(self, expr, env: Dict[str, Enclosure]) -> Enclosure:
        if isinstance(expr, Number):
            if expr.denominator == 0:
                raise DomainError(f"{expr.numerator}/0 is not a real number")
            return Enclosure.exactly(mpq(expr.numerator, expr.denominator))
        if isinstance(expr, Variable):
            try:
                return env[expr.name]
            except KeyError:
                raise ScopeError(f"Unbound variable {expr.name}")
        if isinstance(expr, Neg):
            return -self.value(expr.operand, env)
        if isinstance(expr, BinOp):
            a, b = self.value(expr.left, env), self.value(expr.right, env)
            if expr.op == "+":
                return a + b
            if expr.op == "-":
                return a - b
            return a * b
        if isinstance(expr, Apply):
            argument = self.value(expr.argument, env)
            if isinstance(expr.function, Lambda):
                return self.value(expr.function.body, {**env, expr.function.parameter: argument})
            if expr.function == SQRT:
                return argument.sqrt(self.bits)
            return FORMULAS[expr.function](argument)
        if isinstance(expr, Iterate):
            current = self.value(expr.seed, env)
            for _ in range(expr.count):
                current = self.value(expr.function.body, {**env, expr.function.parameter: current})
            return current
        raise TypeError(f"{expr!r} is not an expression")


def exact_value(expr, bindings: Optional[Dict] = None, bits: int = ORACLE_BITS) -> Enclosure:
    evaluator = ExactEvaluator(bits)
    env = {variable: evaluator.value(value, {}) for variable, value in (bindings or {}).items()}
    return evaluator.value(expr, env)


__all__ = ["ORACLE_BITS", "Enclosure", "FORMULAS", "ExactEvaluator", "exact_value"]
