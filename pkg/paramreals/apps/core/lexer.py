"""
Small regex tokenizer shared by the bound grammar and the expression grammar.
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from .exceptions import ExpressionSyntaxError

END = "END"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str, rules: Iterable[Tuple[str, str]], skip=("WHITESPACE",)) -> List[Token]:
    master = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in rules))
    tokens = []
    position = 0
    while position < len(text):
        match = master.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"Unexpected character {text[position]!r}", position)
        if match.lastgroup not in skip:
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token(END, "", len(text)))
    return tokens


class TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def peek(self, *kinds) -> bool:
        return self.current.kind in kinds

    def advance(self) -> Token:
        token = self.current
        if token.kind != END:
            self.position += 1
        return token

    def accept(self, *kinds):
        if self.peek(*kinds):
            return self.advance()
        return None

    def expect(self, kind, description=None) -> Token:
        if not self.peek(kind):
            found = self.current.text or "end of input"
            raise ExpressionSyntaxError(
                f"Expected {description or kind}, found {found!r}", self.current.offset
            )
        return self.advance()

    def finish(self):
        if not self.peek(END):
            raise ExpressionSyntaxError(
                f"Unexpected {self.current.text!r} after expression", self.current.offset
            )


__all__ = ["Token", "TokenStream", "tokenize", "END"]
