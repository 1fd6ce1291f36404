"""
Second-order polynomials: expressions in a number variable X and a
function variable l, closed under applying l.

Values of the function variable are monotone tables (or any callable from
naturals to naturals). Trees are never simplified; two polynomials are the
same if they evaluate the same.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

from .exceptions import ExpressionSyntaxError
from .lexer import TokenStream, tokenize

LengthFunction = Callable[[int], int]


class Sop:
    def evaluate(self, l: LengthFunction, n: int) -> int:
        raise NotImplementedError

    def __call__(self, l: LengthFunction, n: int) -> int:
        return self.evaluate(l, n)

    def __add__(self, other) -> Sop:
        return Sum(self, as_sop(other))

    def __radd__(self, other) -> Sop:
        return Sum(as_sop(other), self)

    def __mul__(self, other) -> Sop:
        return Product(self, as_sop(other))

    def __rmul__(self, other) -> Sop:
        return Product(as_sop(other), self)

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class FirstOrder(Sop):
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if any(coefficient < 0 for coefficient in self.coefficients):
            raise ValueError(f"Coefficients must be naturals, got {self.coefficients}")

    def evaluate(self, l, n):
        total = 0
        for coefficient in reversed(self.coefficients):
            total = total * n + coefficient
        return total

    def to_text(self) -> str:
        terms = []
        for degree, coefficient in enumerate(self.coefficients):
            if coefficient == 0:
                continue
            power = "" if degree == 0 else ("X" if degree == 1 else f"X^{degree}")
            if not power:
                terms.append(str(coefficient))
            elif coefficient == 1:
                terms.append(power)
            else:
                terms.append(f"{coefficient}*{power}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class Apply(Sop):
    inner: Sop

    def evaluate(self, l, n):
        return l(self.inner.evaluate(l, n))

    def to_text(self) -> str:
        return f"l({self.inner.to_text()})"


@dataclass(frozen=True)
class Sum(Sop):
    left: Sop
    right: Sop

    def evaluate(self, l, n):
        return self.left.evaluate(l, n) + self.right.evaluate(l, n)

    def to_text(self) -> str:
        return f"{self.left.to_text()} + {self.right.to_text()}"


@dataclass(frozen=True)
class Product(Sop):
    left: Sop
    right: Sop

    def evaluate(self, l, n):
        left = self.left.evaluate(l, n)
        return 0 if left == 0 else left * self.right.evaluate(l, n)

    def to_text(self) -> str:
        return f"{_factor_text(self.left)}*{_factor_text(self.right)}"


def _factor_text(P: Sop) -> str:
    text = P.to_text()
    if isinstance(P, Sum) or (isinstance(P, FirstOrder) and "+" in text):
        return f"({text})"
    return text


def polynomial(*coefficients: int) -> FirstOrder:
    return FirstOrder(tuple(coefficients))


def constant(value: int) -> FirstOrder:
    return FirstOrder((value,))


X = polynomial(0, 1)


def apply(inner) -> Apply:
    return Apply(as_sop(inner))


def as_sop(value) -> Sop:
    if isinstance(value, Sop):
        return value
    if isinstance(value, int):
        return constant(value)
    raise TypeError(f"{value!r} is not a second-order polynomial")


def evaluate(P: Sop, l: LengthFunction, n: int) -> int:
    return P.evaluate(l, n)


def _power(P: Sop, exponent: int) -> Sop:
    result: Sop = constant(1)
    for _ in range(exponent):
        result = Product(result, P)
    return result


def compose_arg(P: Sop, Q: Sop) -> Sop:
    """(l, n) -> P(l, Q(l, n))"""
    if isinstance(P, FirstOrder):
        terms = [
            Product(constant(coefficient), _power(Q, degree))
            for degree, coefficient in enumerate(P.coefficients)
            if coefficient
        ]
        if not terms:
            return constant(0)
        result = terms[0]
        for term in terms[1:]:
            result = Sum(result, term)
        return result
    if isinstance(P, Apply):
        return Apply(compose_arg(P.inner, Q))
    if isinstance(P, Sum):
        return Sum(compose_arg(P.left, Q), compose_arg(P.right, Q))
    if isinstance(P, Product):
        return Product(compose_arg(P.left, Q), compose_arg(P.right, Q))
    raise TypeError(f"Unknown polynomial node {P!r}")


def compose_fun(P: Sop, Q: Sop) -> Sop:
    """(l, n) -> P(m -> Q(l, m), n)"""
    if isinstance(P, FirstOrder):
        return P
    if isinstance(P, Apply):
        return compose_arg(Q, compose_fun(P.inner, Q))
    if isinstance(P, Sum):
        return Sum(compose_fun(P.left, Q), compose_fun(P.right, Q))
    if isinstance(P, Product):
        return Product(compose_fun(P.left, Q), compose_fun(P.right, Q))
    raise TypeError(f"Unknown polynomial node {P!r}")


def first_violation(P: Sop, records: Iterable[Tuple[LengthFunction, int, int]]) -> Optional[Tuple]:
    for record in records:
        l, n, observed = record
        if P.evaluate(l, n) < observed:
            return record
    return None


def dominates(P: Sop, records: Iterable[Tuple[LengthFunction, int, int]]) -> bool:
    return first_violation(P, records) is None


def depth(P: Sop) -> int:
    if isinstance(P, FirstOrder):
        return 0
    if isinstance(P, Apply):
        return 1 + depth(P.inner)
    return 1 + max(depth(P.left), depth(P.right))


SOP_TOKENS = (
    ("WHITESPACE", r"\s+"),
    ("NUMBER", r"\d+"),
    ("VARIABLE", r"X|n"),
    ("FUNCTION", r"l(?=\s*\()"),
    ("PLUS", r"\+"),
    ("TIMES", r"\*|·"),
    ("POWER", r"\^"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
)


def _fold_sum(left: Sop, right: Sop) -> Sop:
    if isinstance(left, FirstOrder) and isinstance(right, FirstOrder):
        size = max(len(left.coefficients), len(right.coefficients))
        a = left.coefficients + (0,) * (size - len(left.coefficients))
        b = right.coefficients + (0,) * (size - len(right.coefficients))
        return FirstOrder(tuple(x + y for x, y in zip(a, b)))
    return Sum(left, right)


def _fold_product(left: Sop, right: Sop) -> Sop:
    if isinstance(left, FirstOrder) and isinstance(right, FirstOrder):
        coefficients = [0] * (len(left.coefficients) + len(right.coefficients) - 1)
        for i, a in enumerate(left.coefficients):
            for j, b in enumerate(right.coefficients):
                coefficients[i + j] += a * b
        return FirstOrder(tuple(coefficients))
    return Product(left, right)


class _SopParser:
    def __init__(self, text):
        self.stream = TokenStream(tokenize(text, SOP_TOKENS))

    def parse(self) -> Sop:
        result = self.sum()
        self.stream.finish()
        return result

    def sum(self) -> Sop:
        result = self.product()
        while self.stream.accept("PLUS"):
            result = _fold_sum(result, self.product())
        return result

    def product(self) -> Sop:
        result = self.power()
        while True:
            if self.stream.accept("TIMES"):
                result = _fold_product(result, self.power())
            elif self.stream.peek("VARIABLE", "FUNCTION", "LPAREN"):
                # juxtaposition, as in "3X" or "2 l(X)"
                result = _fold_product(result, self.power())
            else:
                return result

    def power(self) -> Sop:
        base = self.atom()
        if self.stream.accept("POWER"):
            exponent = int(self.stream.expect("NUMBER", "an exponent").text)
            if isinstance(base, FirstOrder):
                result: Sop = constant(1)
                for _ in range(exponent):
                    result = _fold_product(result, base)
                return result
            return _power(base, exponent)
        return base

    def atom(self) -> Sop:
        token = self.stream.current
        if self.stream.accept("NUMBER"):
            return constant(int(token.text))
        if self.stream.accept("VARIABLE"):
            return X
        if self.stream.accept("FUNCTION"):
            self.stream.expect("LPAREN", "'('")
            inner = self.sum()
            self.stream.expect("RPAREN", "')'")
            return Apply(inner)
        if self.stream.accept("LPAREN"):
            inner = self.sum()
            self.stream.expect("RPAREN", "')'")
            return inner
        raise ExpressionSyntaxError(
            f"Expected a number, X, l(...) or '(', found {token.text or 'end of input'!r}",
            token.offset,
        )


def parse_sop(text: str) -> Sop:
    return _SopParser(text).parse()


__all__ = [
    "Sop",
    "FirstOrder",
    "Apply",
    "Sum",
    "Product",
    "X",
    "polynomial",
    "constant",
    "apply",
    "as_sop",
    "evaluate",
    "compose_arg",
    "compose_fun",
    "dominates",
    "first_violation",
    "depth",
    "parse_sop",
]
