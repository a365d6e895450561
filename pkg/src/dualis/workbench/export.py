"""Graphviz and JSON renderings of algebras and spaces.

Objects are named as in a document: ``NAME`` or ``LOGIC/NAME`` for an algebra
(ordered by the specialization order of the logic), ``dual:NAME`` or
``dual:LOGIC/NAME`` for the dual space of an algebra, and a space block's name
for a hand-written space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .. import bits
from ..algebra import FiniteAlgebra
from ..logic import LogicPresentation, specialization
from ..priestley import SPriestleySpace, dual_space
from .document import WorkbenchDocument
from .suites import space_from_decl


@dataclass
class Resolved:
    name: str
    logic: LogicPresentation
    algebra: FiniteAlgebra | None = None
    space: SPriestleySpace | None = None


def default_logic(doc: WorkbenchDocument, algebra: str) -> LogicPresentation:
    """The logic a suite pairs with the algebra, else the first whose connectives it interprets."""
    for suite in doc.suites.values():
        for lg, names in suite.pairs:
            if algebra in names:
                return doc.logics[lg]
    ops = set(doc.algebras[algebra].signature.names)
    for L in doc.logics.values():
        if set(L.signature.names) <= ops:
            return L
    raise KeyError(f"no logic in the document interprets the connectives of {algebra}")


def resolve(doc: WorkbenchDocument, obj: str) -> Resolved:
    dual = obj.startswith("dual:")
    ref = obj[5:] if dual else obj
    if not dual and ref in doc.spaces:
        sp = space_from_decl(doc, ref)
        return Resolved(ref, sp.logic, space=sp)
    lg, _, name = ref.rpartition("/")
    if name not in doc.algebras:
        raise KeyError(f"unknown algebra or space {name!r}")
    if lg and lg not in doc.logics:
        raise KeyError(f"unknown logic {lg!r}")
    L = doc.logics[lg] if lg else default_logic(doc, name)
    A = doc.algebras[name].reduct(L.signature)
    if dual:
        return Resolved(f"Dp({name})", L, space=dual_space(L, A))
    return Resolved(name, L, algebra=A)


def _quasi_covers(up) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Covers of the strict part of a quasiorder given by up-sets, and its equivalent pairs."""
    n = len(up)
    below = lambda a, b: bool(up[a] >> b & 1)
    strict = lambda a, b: below(a, b) and not below(b, a)
    covers = [(a, b) for a in range(n) for b in range(n)
              if strict(a, b) and not any(strict(a, c) and strict(c, b) for c in range(n))]
    same = [(a, b) for a in range(n) for b in range(a + 1, n) if below(a, b) and below(b, a)]
    return covers, same


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(title: str, labels, up, designated: int | None = None) -> str:
    covers, same = _quasi_covers(up)
    lines = [f"digraph {_quote(title)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i, lab in enumerate(labels):
        shape = ", shape=doublecircle" if designated is not None and designated >> i & 1 else ""
        lines.append(f"  n{i} [label={_quote(lab)}{shape}];")
    lines += [f"  n{a} -> n{b};" for a, b in covers]
    lines += [f"  n{a} -> n{b} [dir=none, style=dashed];" for a, b in same]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(doc: WorkbenchDocument, obj: str) -> str:
    """Hasse diagram, bottom to top; points of the designated set are drawn doubled."""
    r = resolve(doc, obj)
    if r.space is not None:
        sp = r.space
        labels = [sp.point(x) for x in range(sp.size)]
        return _dot(r.name, labels, sp.quasi_up, sp.xb)
    A = r.algebra
    return _dot(r.name, [A.label(a) for a in range(A.size)], specialization(r.logic, A))


def _tables(A: FiniteAlgebra) -> dict:
    return {op: {"arity": A.signature.arity(op), "table": [A.label(v) for v in table]}
            for op, table in A.tables}


def _order(labels, up) -> list[list[str]]:
    covers, same = _quasi_covers(up)
    return [[labels[a], labels[b]] for a, b in covers + same + [(b, a) for a, b in same]]


def export_data(doc: WorkbenchDocument, obj: str) -> dict:
    r = resolve(doc, obj)
    if r.space is not None:
        sp = r.space
        points = [sp.point(x) for x in range(sp.size)]
        A = sp.algebra
        return {"kind": "space", "name": r.name, "logic": r.logic.name, "points": points,
                "order": _order(points, sp.quasi_up),
                "designated": [points[x] for x in bits.iter_bits(sp.xb)],
                "family": {A.label(i): [points[x] for x in bits.iter_bits(U)]
                           for i, U in enumerate(sp.sets)},
                "operations": _tables(A)}
    A = r.algebra
    labels = [A.label(a) for a in range(A.size)]
    return {"kind": "algebra", "name": r.name, "logic": r.logic.name, "elements": labels,
            "order": _order(labels, specialization(r.logic, A)), "operations": _tables(A)}


def export_json(doc: WorkbenchDocument, obj: str) -> str:
    return json.dumps(export_data(doc, obj), indent=2, ensure_ascii=False) + "\n"
