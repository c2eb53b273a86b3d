"""Tokenizer for the textual diagram subset.

Line comments start with a single quote; ``@startuml``/``@enduml`` wrappers
and blank lines are skipped.  Tokens carry 1-based line/column positions so
parse errors point into the original source.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .model import ParseError

IDENT = "ident"
NUMBER = "number"
STRING = "string"
STEREOTYPE = "stereotype"  # <<...>> with the inner text as value
LBRACE = "{"
RBRACE = "}"
LPAREN = "("
RPAREN = ")"
COLON = ":"
COMMA = ","
VISIBILITY = "visibility"
ARROW = "->"
ASSOC = "-->"
EQEQ = "=="
EOF = "end of input"


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == EOF:
            return EOF
        return f"'{self.value}'"


_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r]+)
    | (?P<comment>'[^\n]*)
    | (?P<at>@(?:startuml|enduml)\b[^\n]*)
    | (?P<newline>\n)
    | (?P<stereo><<[ \t]*(?P<stereo_name>[A-Za-z_][A-Za-z0-9_]*)[ \t]*>>)
    | (?P<assoc>-->)
    | (?P<arrow>->)
    | (?P<eqeq>==)
    | (?P<number>-?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<string>"[^"\n]*")
    | (?P<punct>[{}():,])
    | (?P<vis>[+\-\#])
""",
    re.VERBOSE,
)


def tokenize(source: str) -> list[Token]:
    """Split source into tokens, raising ParseError on stray characters."""
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    length = len(source)
    while pos < length:
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            raise ParseError(line, col, "a token", repr(source[pos]))
        text = match.group(0)
        kind = match.lastgroup
        if kind == "stereo_name":
            kind = "stereo"  # lastgroup reports the innermost group
        if kind == "newline":
            line += 1
            col = 1
        elif kind in ("ws", "comment", "at"):
            col += len(text)
        else:
            token_kind, value = _classify(kind, match)
            tokens.append(Token(token_kind, value, line, col))
            col += len(text)
        pos = match.end()
    tokens.append(Token(EOF, "", line, col))
    return tokens


def _classify(kind: str, match: re.Match) -> tuple[str, str]:
    text = match.group(0)
    if kind == "stereo":
        return STEREOTYPE, match.group("stereo_name")
    if kind == "assoc":
        return ASSOC, text
    if kind == "arrow":
        return ARROW, text
    if kind == "eqeq":
        return EQEQ, text
    if kind == "number":
        return NUMBER, text
    if kind == "ident":
        return IDENT, text
    if kind == "string":
        return STRING, text[1:-1]
    if kind == "punct":
        return text, text
    if kind == "vis":
        return VISIBILITY, text
    raise AssertionError(f"unhandled token kind {kind}")


class TokenCursor:
    """Sequential token reader with positioned error reporting."""

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._index = 0

    def peek(self, offset: int = 0) -> Token:
        index = min(self._index + offset, len(self._tokens) - 1)
        return self._tokens[index]

    def at_end(self) -> bool:
        return self.peek().kind == EOF

    def advance(self) -> Token:
        token = self.peek()
        if token.kind != EOF:
            self._index += 1
        return token

    def check(self, kind: str, value: str | None = None) -> bool:
        token = self.peek()
        if token.kind != kind:
            return False
        return value is None or token.value == value

    def expect(self, kind: str, value: str | None = None, expected: str | None = None) -> Token:
        if not self.check(kind, value):
            token = self.peek()
            wanted = expected or (f"'{value}'" if value is not None else kind)
            raise ParseError(token.line, token.column, wanted, token.describe())
        return self.advance()

    def error(self, expected: str, token: Token | None = None) -> ParseError:
        token = token or self.peek()
        return ParseError(token.line, token.column, expected, token.describe())
