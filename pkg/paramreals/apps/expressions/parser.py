"""
Parser and printer for real expressions:

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | atom
    atom    := NUMBER ["/" NUMBER] | NAME | "(" expr ")"
             | "apply" "(" (NAME | lambda) "," expr ")"
             | "iterate" "(" lambda "," NUMBER "," expr ")"
    lambda  := NAME "->" expr

A slash only ever appears inside a rational literal; there is no division.
"""
import re

from paramreals.apps.core.exceptions import ExpressionSyntaxError
from paramreals.apps.core.lexer import TokenStream, tokenize

from .nodes import FUNCTION_NAMES, Apply, BinOp, Iterate, Lambda, Neg, Number, Variable

EXPRESSION_TOKENS = (
    ("WHITESPACE", r"\s+"),
    ("NUMBER", r"\d+"),
    ("KEYWORD", r"(?:apply|iterate)\b"),
    ("NAME", r"[A-Za-z_][A-Za-z_0-9]*"),
    ("ARROW", r"->"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("TIMES", r"\*"),
    ("SLASH", r"/"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("COMMA", r","),
)

NAME_FORMAT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")

BINDING_POWER = {"+": 1, "-": 1, "*": 2}
UNARY_POWER = 3
ATOM_POWER = 4


class _ExpressionParser:
    def __init__(self, text):
        self.stream = TokenStream(tokenize(text, EXPRESSION_TOKENS))

    def parse(self):
        result = self.sum()
        self.stream.finish()
        return result

    def sum(self):
        result = self.product()
        while self.stream.peek("PLUS", "MINUS"):
            op = self.stream.advance().text
            result = BinOp(op, result, self.product())
        return result

    def product(self):
        result = self.unary()
        while self.stream.accept("TIMES"):
            result = BinOp("*", result, self.unary())
        return result

    def unary(self):
        if self.stream.accept("MINUS"):
            return Neg(self.unary())
        return self.atom()

    def natural(self, description) -> int:
        return int(self.stream.expect("NUMBER", description).text)

    def atom(self):
        token = self.stream.current
        if self.stream.accept("NUMBER"):
            if self.stream.accept("SLASH"):
                return Number(int(token.text), self.natural("a denominator"))
            return Number(int(token.text))
        if self.stream.accept("NAME"):
            return Variable(token.text)
        if self.stream.accept("LPAREN"):
            inner = self.sum()
            self.stream.expect("RPAREN", "')'")
            return inner
        if self.stream.accept("KEYWORD"):
            self.stream.expect("LPAREN", "'('")
            result = self.apply() if token.text == "apply" else self.iterate()
            self.stream.expect("RPAREN", "')'")
            return result
        raise ExpressionSyntaxError(
            f"Expected a number, a name, apply, iterate or '(', "
            f"found {token.text or 'end of input'!r}",
            token.offset,
        )

    def function(self):
        token = self.stream.expect("NAME", "a function name or a lambda")
        if self.stream.accept("ARROW"):
            return Lambda(token.text, self.sum())
        if token.text not in FUNCTION_NAMES:
            raise ExpressionSyntaxError(f"Unknown function {token.text!r}", token.offset)
        return token.text

    def lambda_(self):
        parameter = self.stream.expect("NAME", "a lambda parameter").text
        self.stream.expect("ARROW", "'->'")
        return Lambda(parameter, self.sum())

    def apply(self):
        function = self.function()
        self.stream.expect("COMMA", "','")
        return Apply(function, self.sum())

    def iterate(self):
        function = self.lambda_()
        self.stream.expect("COMMA", "','")
        count = self.natural("an iteration count")
        self.stream.expect("COMMA", "','")
        return Iterate(function, count, self.sum())


def parse(text: str):
    return _ExpressionParser(text).parse()


def parse_binding(text: str):
    """Splits name=expression into the name and the parsed expression"""
    name, separator, value = text.partition("=")
    name = name.strip()
    if not separator or not NAME_FORMAT.match(name):
        raise ExpressionSyntaxError(f"Expected name=value, got {text!r}", 0)
    return name, parse(value)


def _power(expr) -> int:
    if isinstance(expr, BinOp):
        return BINDING_POWER[expr.op]
    if isinstance(expr, Neg):
        return UNARY_POWER
    return ATOM_POWER


def _wrapped(expr, needs_parentheses: bool) -> str:
    text = to_text(expr)
    return f"({text})" if needs_parentheses else text


def _function_text(function) -> str:
    if isinstance(function, Lambda):
        return f"{function.parameter} -> {to_text(function.body)}"
    return function


def to_text(expr) -> str:
    """Inverse of parse, up to whitespace"""
    if isinstance(expr, Number):
        if expr.denominator == 1:
            return str(expr.numerator)
        return f"{expr.numerator}/{expr.denominator}"
    if isinstance(expr, Variable):
        return expr.name
    if isinstance(expr, Neg):
        return "-" + _wrapped(expr.operand, _power(expr.operand) < UNARY_POWER)
    if isinstance(expr, BinOp):
        power = BINDING_POWER[expr.op]
        left = _wrapped(expr.left, _power(expr.left) < power)
        right = _wrapped(expr.right, _power(expr.right) <= power)
        return f"{left} {expr.op} {right}"
    if isinstance(expr, Apply):
        return f"apply({_function_text(expr.function)}, {to_text(expr.argument)})"
    if isinstance(expr, Iterate):
        function = _function_text(expr.function)
        return f"iterate({function}, {expr.count}, {to_text(expr.seed)})"
    raise TypeError(f"{expr!r} is not an expression")


__all__ = ["EXPRESSION_TOKENS", "parse", "parse_binding", "to_text"]
