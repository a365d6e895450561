"""Tokenizer shared by the term parser and the document parser."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DualisError


class ParseError(DualisError):
    def __init__(self, message: str, line: int = 0, col: int = 0, end_col: int | None = None):
        where = f"{line}:{col}: " if line else ""
        super().__init__(f"{where}{message}")
        self.message = message
        self.line = line
        self.col = col
        self.end_col = end_col if end_col is not None else col


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def end_col(self) -> int:
        return self.col + len(self.text)


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<punct>\|->|\|-|->|<=|↦|[{}(),;:=/|])
  | (?P<name>[A-Za-z0-9_](?:[A-Za-z0-9_.'′]|-(?=[A-Za-z0-9_]))*)
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    out = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "newline":
            line += 1
            line_start = m.end()
        elif kind in ("punct", "name"):
            tok = m.group()
            if tok in ("|->", "↦"):
                tok = "->"
            out.append(Token(kind, tok, line, m.start() - line_start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - line_start + 1))
    return out


class TokenStream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind == "punct"

    def accept(self, text: str) -> Token | None:
        if self.at(text):
            return self.next()
        return None

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            shown = tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {shown!r}", tok.line, tok.col, tok.end_col)
        return self.next()

    def name(self, what: str = "name") -> Token:
        tok = self.peek()
        if tok.kind != "name":
            shown = tok.text or "end of input"
            raise ParseError(f"expected {what}, found {shown!r}", tok.line, tok.col, tok.end_col)
        return self.next()
