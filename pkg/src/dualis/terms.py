"""Terms over a signature and their evaluation in finite algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .syntax import ParseError, TokenStream, tokenize


@dataclass(frozen=True)
class Signature:
    connectives: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [n for n, _ in self.connectives]
        if len(set(names)) != len(names):
            raise ValueError("connective names must be unique")
        if any(a < 0 for _, a in self.connectives):
            raise ValueError("arities are non-negative")

    @classmethod
    def of(cls, **arities: int) -> "Signature":
        return cls(tuple(arities.items()))

    def arity(self, name: str) -> int:
        for n, a in self.connectives:
            if n == name:
                return a
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(n == name for n, _ in self.connectives)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.connectives)

    def extend(self, other: "Signature") -> "Signature":
        extra = tuple(c for c in other.connectives if c[0] not in self)
        return Signature(self.connectives + extra)


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class App:
    op: str
    args: tuple["Term", ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.op
        return f"{self.op}({','.join(str(a) for a in self.args)})"


Term = Union[Var, App]


def variables(t: Term) -> tuple[str, ...]:
    """Variables of ``t`` in order of first occurrence."""
    seen: list[str] = []

    def walk(u):
        if isinstance(u, Var):
            if u.name not in seen:
                seen.append(u.name)
        else:
            for a in u.args:
                walk(a)

    walk(t)
    return tuple(seen)


def evaluate(t: Term, algebra, assignment: Mapping[str, int]) -> int:
    if isinstance(t, Var):
        return assignment[t.name]
    return algebra.apply(t.op, *(evaluate(a, algebra, assignment) for a in t.args))


def parse_term_tokens(ts: TokenStream, signature: Signature) -> Term:
    tok = ts.name("term")
    if tok.text not in signature:
        if ts.at("("):
            raise ParseError(f"unknown connective {tok.text!r}", tok.line, tok.col, tok.end_col)
        return Var(tok.text)
    arity = signature.arity(tok.text)
    args = []
    if ts.accept("("):
        if not ts.at(")"):
            args.append(parse_term_tokens(ts, signature))
            while ts.accept(","):
                args.append(parse_term_tokens(ts, signature))
        close = ts.expect(")")
        end = close.end_col
    else:
        end = tok.end_col
    if len(args) != arity:
        raise ParseError(f"{tok.text} takes {arity} argument(s), got {len(args)}",
                         tok.line, tok.col, end)
    return App(tok.text, tuple(args))


def parse_term(text: str, signature: Signature) -> Term:
    """Parse ``and(p,top)`` style syntax; unknown bare names are variables."""
    ts = TokenStream(tokenize(text))
    t = parse_term_tokens(ts, signature)
    tail = ts.peek()
    if tail.kind != "eof":
        raise ParseError(f"unexpected {tail.text!r} after term", tail.line, tail.col, tail.end_col)
    return t
