"""Regex-driven tokenizer shared by the CDL and call-flow front ends."""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass

from ..errors import LexError

CDL_KEYWORDS = frozenset({"signature", "celltype", "cell", "entry", "call", "attr", "var", "void"})

PUNCT = {
    "{": "lbrace",
    "}": "rbrace",
    "(": "lparen",
    ")": "rparen",
    ";": "semi",
    ",": "comma",
    "=": "eq",
    ".": "dot",
}


@dataclass(frozen=True, order=True)
class Span:
    start: int
    end: int
    line: int
    col: int

    def __str__(self):
        return f"{self.line}:{self.col}"


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    span: Span

    def __repr__(self):
        if self.kind in PUNCT.values():
            return self.kind
        return f"{self.kind}:{self.lexeme}"


_SCANNER = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<line_comment>//[^\n]*)
  | (?P<block_comment>/\*.*?\*/)
  | (?P<float>-?[0-9]+\.[0-9]+(?:[eE][+-]?[0-9]+)?)
  | (?P<int>-?[0-9]+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{}();,=.])
    """,
    re.VERBOSE | re.DOTALL,
)


def _position(text, offset, line_starts):
    line = bisect.bisect_right(line_starts, offset)
    return line, offset - line_starts[line - 1] + 1


def tokenize(text: str, keywords=CDL_KEYWORDS) -> list[Token]:
    """Split *text* into tokens, dropping whitespace and comments.

    Raises LexError at the first byte sequence no rule accepts, including
    an unterminated block comment.
    """
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def span(a, b):
        line, col = _position(text, a, line_starts)
        return Span(a, b, line, col)

    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _SCANNER.match(text, pos)
        if m is None:
            if text.startswith("/*", pos):
                raise LexError(span(pos, n), "unterminated block comment")
            raise LexError(span(pos, pos + 1), f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "word":
            if lexeme in ("true", "false"):
                kind = "bool"
            elif lexeme in keywords:
                kind = "kw"
            else:
                kind = "ident"
        elif kind == "punct":
            kind = PUNCT[lexeme]
        if kind not in ("ws", "line_comment", "block_comment"):
            tokens.append(Token(kind, lexeme, span(m.start(), m.end())))
        pos = m.end()
    return tokens
