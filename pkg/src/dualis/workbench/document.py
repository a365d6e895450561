"""Workbench documents: parsing and canonical printing.

A document is a sequence of blocks::

    algebra M4 {
      elements: 0 a b 1;
      op and/2 { 0 0 0 0  0 a 0 a  0 0 b b  0 a b 1 };
      op top/0 { 1 };
    }
    logic L_TOP_AND {
      connectives: and/2, top/0;
      rule: |- top;
      rule: p, q |- and(p,q);
      assert: congruential has-theorems;
      witness: pc=and(p,q);
    }
    hom f : C2 -> M4 { 0 -> 0; 1 -> 1 }
    space X { logic: L; points: x y; set U { x }; op ... }
    suite full-duality { logic L_TOP_AND: C2 M4; homs L_TOP_AND: f; checks: filters space; }

``#`` starts a comment. Hom arrows may be written ``->``, ``|->`` or ``↦``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .. import bits
from ..algebra import FiniteAlgebra, homomorphism_failure
from ..logic import ASSERTION_FLAGS, WITNESS_TAGS, LogicPresentation, Rule
from ..syntax import ParseError, Token, TokenStream, tokenize
from ..terms import Signature, Term, parse_term_tokens


@dataclass(frozen=True)
class HomDecl:
    name: str
    source: str
    target: str
    mapping: tuple[int, ...]


@dataclass(frozen=True)
class SpaceDecl:
    """A referential algebra written out by hand: points, named subsets and tables on them."""

    name: str
    logic: str
    points: tuple[str, ...]
    sets: tuple[tuple[str, int], ...]
    algebra: FiniteAlgebra


@dataclass(frozen=True)
class SuiteDecl:
    name: str
    pairs: tuple[tuple[str, tuple[str, ...]], ...]
    homs: tuple[tuple[str, tuple[str, ...]], ...]
    spaces: tuple[str, ...]
    checks: tuple[str, ...]


@dataclass
class WorkbenchDocument:
    algebras: dict[str, FiniteAlgebra] = field(default_factory=dict)
    logics: dict[str, LogicPresentation] = field(default_factory=dict)
    homs: dict[str, HomDecl] = field(default_factory=dict)
    spaces: dict[str, SpaceDecl] = field(default_factory=dict)
    suites: dict[str, SuiteDecl] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    def hom(self, name: str) -> tuple[tuple[int, ...], FiniteAlgebra, FiniteAlgebra]:
        h = self.homs[name]
        return h.mapping, self.algebras[h.source], self.algebras[h.target]

    def add(self, kind: str, name: str, value) -> None:
        table = getattr(self, kind + "s")
        if name in self.names():
            raise ValueError(f"duplicate name {name!r}")
        table[name] = value
        self.order.append((kind, name))

    def names(self) -> set[str]:
        return set(self.algebras) | set(self.logics) | set(self.homs) | set(self.spaces) | set(self.suites)


class _Parser:
    def __init__(self, text: str):
        self.ts = TokenStream(tokenize(text))
        self.doc = WorkbenchDocument()

    def error(self, message: str, tok: Token) -> ParseError:
        return ParseError(message, tok.line, tok.col, tok.end_col)

    def parse(self) -> WorkbenchDocument:
        ts = self.ts
        while ts.peek().kind != "eof":
            kw = ts.name("block keyword")
            handler = {"algebra": self.algebra, "logic": self.logic, "hom": self.hom,
                       "space": self.space, "suite": self.suite}.get(kw.text)
            if handler is None:
                raise self.error(f"unknown block {kw.text!r}", kw)
            name = ts.name(f"{kw.text} name")
            if name.text in self.doc.names():
                raise self.error(f"duplicate name {name.text!r}", name)
            value = handler(name.text)
            kind = kw.text
            self.doc.add(kind, name.text, value)
        return self.doc

    def names_until(self, stop: str) -> list[Token]:
        out = []
        while not self.ts.at(stop):
            out.append(self.ts.name())
        return out

    # blocks

    def tables(self, labels: list[str]) -> list[tuple[str, int, list[Token]]]:
        out = []
        while self.ts.peek().text == "op":
            self.ts.next()
            op = self.ts.name("operation name")
            self.ts.expect("/")
            ar = self.ts.name("arity")
            if not ar.text.isdigit():
                raise self.error("arity must be a number", ar)
            self.ts.expect("{")
            entries = self.names_until("}")
            self.ts.expect("}")
            self.ts.expect(";")
            out.append((op.text, int(ar.text), entries, op))
        return out

    def build_algebra(self, name: str, labels: list[str], tables, where: Token) -> FiniteAlgebra:
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        sig, flat = [], []
        for op, arity, entries, tok in tables:
            if len(entries) != n ** arity:
                raise self.error(f"table of {op}/{arity} needs {n ** arity} entries, got {len(entries)}", tok)
            row = []
            for e in entries:
                if e.text not in index:
                    raise self.error(f"unknown element {e.text!r}", e)
                row.append(index[e.text])
            sig.append((op, arity))
            flat.append((op, tuple(row)))
        try:
            return FiniteAlgebra(Signature(tuple(sig)), n, tuple(flat), tuple(labels), name)
        except ValueError as exc:
            raise self.error(str(exc), where) from None

    def algebra(self, name: str) -> FiniteAlgebra:
        ts = self.ts
        start = ts.expect("{")
        kw = ts.name()
        if kw.text != "elements":
            raise self.error("algebra blocks start with 'elements:'", kw)
        ts.expect(":")
        labels = [t.text for t in self.names_until(";")]
        ts.expect(";")
        if len(set(labels)) != len(labels):
            raise self.error("duplicate element names", kw)
        tables = self.tables(labels)
        ts.expect("}")
        return self.build_algebra(name, labels, tables, start)

    def logic(self, name: str) -> LogicPresentation:
        ts = self.ts
        ts.expect("{")
        sig: list[tuple[str, int]] = []
        rules: list[Rule] = []
        assertions: list[str] = []
        witnesses: list[tuple[str, tuple[Term, ...]]] = []
        while not ts.at("}"):
            kw = ts.name("logic field")
            ts.expect(":")
            if kw.text == "connectives":
                while True:
                    op = ts.name("connective")
                    ts.expect("/")
                    ar = ts.name("arity")
                    sig.append((op.text, int(ar.text)))
                    if not ts.accept(","):
                        break
            elif kw.text == "rule":
                rules.append(self.rule(Signature(tuple(sig))))
            elif kw.text == "assert":
                for flag in self.names_until(";"):
                    if flag.text not in ASSERTION_FLAGS:
                        raise self.error(f"unknown assertion {flag.text!r}", flag)
                    assertions.append(flag.text)
            elif kw.text == "witness":
                signature = Signature(tuple(sig))
                while True:
                    tag = ts.name("witness tag")
                    if tag.text not in WITNESS_TAGS:
                        raise self.error(f"unknown witness tag {tag.text!r}", tag)
                    ts.expect("=")
                    terms = [parse_term_tokens(ts, signature)]
                    while ts.accept(","):
                        terms.append(parse_term_tokens(ts, signature))
                    witnesses.append((tag.text, tuple(terms)))
                    if not ts.accept("|"):
                        break
            else:
                raise self.error(f"unknown logic field {kw.text!r}", kw)
            ts.expect(";")
        close = ts.expect("}")
        logic = LogicPresentation(name, Signature(tuple(sig)), tuple(rules),
                                  frozenset(assertions), tuple(witnesses))
        if logic.asserts("has-theorems") and not logic.has_theorems:
            raise self.error("'has-theorems' asserted but no rule is an axiom", close)
        return logic

    def rule(self, signature: Signature) -> Rule:
        ts = self.ts
        premises = []
        if not ts.at("|-"):
            premises.append(parse_term_tokens(ts, signature))
            while ts.accept(","):
                premises.append(parse_term_tokens(ts, signature))
        ts.expect("|-")
        return Rule(tuple(premises), parse_term_tokens(ts, signature))

    def ref(self, kind: str) -> Token:
        tok = self.ts.name(f"{kind} name")
        table = {"algebra": self.doc.algebras, "logic": self.doc.logics, "hom": self.doc.homs,
                 "space": self.doc.spaces}[kind]
        if tok.text not in table:
            raise self.error(f"unresolved reference to {kind} {tok.text!r}", tok)
        return tok

    def hom(self, name: str) -> HomDecl:
        ts = self.ts
        ts.expect(":")
        src = self.ref("algebra")
        ts.expect("->")
        dst = self.ref("algebra")
        A, B = self.doc.algebras[src.text], self.doc.algebras[dst.text]
        ts.expect("{")
        mapping: dict[int, int] = {}
        while not ts.at("}"):
            x = ts.name("element")
            ts.expect("->")
            y = ts.name("element")
            if x.text not in A.labels:
                raise self.error(f"{x.text!r} is not an element of {src.text}", x)
            if y.text not in B.labels:
                raise self.error(f"{y.text!r} is not an element of {dst.text}", y)
            mapping[A.element(x.text)] = B.element(y.text)
            if not ts.accept(";"):
                ts.accept(",")
        close = ts.expect("}")
        if len(mapping) != A.size:
            raise self.error(f"hom {name} is not total on {src.text}", close)
        h = tuple(mapping[a] for a in range(A.size))
        bad = homomorphism_failure(h, A, B)
        if bad is not None:
            raise self.error(f"{name} is not a homomorphism: {bad}", close)
        return HomDecl(name, src.text, dst.text, h)

    def space(self, name: str) -> SpaceDecl:
        ts = self.ts
        start = ts.expect("{")
        kw = ts.name()
        if kw.text != "logic":
            raise self.error("space blocks start with 'logic:'", kw)
        ts.expect(":")
        logic = self.ref("logic")
        ts.expect(";")
        kw = ts.name()
        if kw.text != "points":
            raise self.error("expected 'points:'", kw)
        ts.expect(":")
        points = [t.text for t in self.names_until(";")]
        ts.expect(";")
        sets: list[tuple[str, int]] = []
        while ts.peek().text == "set":
            ts.next()
            sname = ts.name("set name")
            ts.expect("{")
            m = 0
            for p in self.names_until("}"):
                if p.text not in points:
                    raise self.error(f"unknown point {p.text!r}", p)
                m |= 1 << points.index(p.text)
            ts.expect("}")
            ts.expect(";")
            sets.append((sname.text, m))
        labels = [s for s, _ in sets]
        tables = self.tables(labels)
        ts.expect("}")
        algebra = self.build_algebra(name, labels, tables, start)
        return SpaceDecl(name, logic.text, tuple(points), tuple(sets), algebra)

    def suite(self, name: str) -> SuiteDecl:
        ts = self.ts
        ts.expect("{")
        pairs, homs, spaces, checks = [], [], [], []
        while not ts.at("}"):
            kw = ts.name("suite field")
            if kw.text in ("logic", "homs"):
                lg = self.ref("logic")
                ts.expect(":")
                kind = "algebra" if kw.text == "logic" else "hom"
                items = []
                while not ts.at(";"):
                    items.append(self.ref(kind).text)
                (pairs if kw.text == "logic" else homs).append((lg.text, tuple(items)))
            elif kw.text == "spaces":
                ts.expect(":")
                while not ts.at(";"):
                    spaces.append(self.ref("space").text)
            elif kw.text == "checks":
                ts.expect(":")
                checks.extend(t.text for t in self.names_until(";"))
            else:
                raise self.error(f"unknown suite field {kw.text!r}", kw)
            ts.expect(";")
        ts.expect("}")
        return SuiteDecl(name, tuple(pairs), tuple(homs), tuple(spaces), tuple(checks))


def parse_document(text: str) -> WorkbenchDocument:
    return _Parser(text).parse()


# printing

def _print_tables(A: FiniteAlgebra) -> list[str]:
    out = []
    for op, arity in A.signature.connectives:
        entries = [A.label(v) for v in A.table(op)]
        if arity <= 1:
            body = " ".join(entries)
        else:
            row = A.size ** (arity - 1)
            body = "  ".join(" ".join(entries[i:i + row]) for i in range(0, len(entries), row))
        out.append(f"  op {op}/{arity} {{ {body} }};")
    return out


def print_algebra(A: FiniteAlgebra) -> str:
    lines = [f"algebra {A.name} {{", f"  elements: {' '.join(A.label(a) for a in range(A.size))};"]
    lines += _print_tables(A)
    lines.append("}")
    return "\n".join(lines)


def print_logic(L: LogicPresentation) -> str:
    conn = ", ".join(f"{op}/{ar}" for op, ar in L.signature.connectives)
    lines = [f"logic {L.name} {{", f"  connectives: {conn};"]
    lines += [f"  rule: {r};" for r in L.rules]
    flags = [f for f in ASSERTION_FLAGS if f in L.assertions]
    if flags:
        lines.append(f"  assert: {' '.join(flags)};")
    for tag, terms in L.witnesses:
        lines.append(f"  witness: {tag}={', '.join(str(t) for t in terms)};")
    lines.append("}")
    return "\n".join(lines)


def print_document(doc: WorkbenchDocument) -> str:
    blocks = []
    for kind, name in doc.order:
        if kind == "algebra":
            blocks.append(print_algebra(doc.algebras[name]))
        elif kind == "logic":
            blocks.append(print_logic(doc.logics[name]))
        elif kind == "hom":
            h = doc.homs[name]
            A, B = doc.algebras[h.source], doc.algebras[h.target]
            pairs = "; ".join(f"{A.label(a)} -> {B.label(b)}" for a, b in enumerate(h.mapping))
            blocks.append(f"hom {name} : {h.source} -> {h.target} {{ {pairs} }}")
        elif kind == "space":
            sp = doc.spaces[name]
            lines = [f"space {name} {{", f"  logic: {sp.logic};", f"  points: {' '.join(sp.points)};"]
            for sname, m in sp.sets:
                inside = " ".join(sp.points[i] for i in bits.iter_bits(m))
                lines.append(f"  set {sname} {{ {inside} }};" if inside else f"  set {sname} {{ }};")
            lines += _print_tables(sp.algebra)
            lines.append("}")
            blocks.append("\n".join(lines))
        else:
            s = doc.suites[name]
            lines = [f"suite {name} {{"]
            lines += [f"  logic {lg}: {' '.join(items)};" for lg, items in s.pairs]
            lines += [f"  homs {lg}: {' '.join(items)};" for lg, items in s.homs]
            if s.spaces:
                lines.append(f"  spaces: {' '.join(s.spaces)};")
            lines.append(f"  checks: {' '.join(s.checks)};")
            lines.append("}")
            blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def algebra_from_function(name: str, signature: Signature, labels, functions) -> FiniteAlgebra:
    """Build an algebra whose operations are Python functions on labels."""
    index = {lab: i for i, lab in enumerate(labels)}
    tables = []
    for op, arity in signature.connectives:
        f = functions[op]
        tables.append((op, tuple(index[f(*(labels[i] for i in args))]
                                 for args in product(range(len(labels)), repeat=arity))))
    return FiniteAlgebra(signature, len(labels), tuple(tables), tuple(labels), name)


__all__ = ["WorkbenchDocument", "HomDecl", "SpaceDecl", "SuiteDecl", "parse_document",
           "print_document", "print_algebra", "print_logic", "algebra_from_function"]
