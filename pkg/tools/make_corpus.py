"""Regenerate the shipped fixture documents from Python definitions of the algebras.

Run from the repository root: ``python tools/make_corpus.py``.
"""

from __future__ import annotations

from pathlib import Path

from dualis.terms import Signature
from dualis.workbench.document import algebra_from_function, print_algebra

DATA = Path(__file__).resolve().parents[1] / "src" / "dualis" / "data"

AND_TOP = Signature((("and", 2), ("top", 0)))
AND_ONLY = Signature((("and", 2),))
IMP = Signature((("imp", 2),))
LATTICE = Signature((("and", 2), ("or", 2), ("top", 0)))
HEYTING = Signature((("and", 2), ("or", 2), ("imp", 2), ("top", 0)))
HEYTING_BOT = Signature((("and", 2), ("or", 2), ("imp", 2), ("top", 0), ("bot", 0)))


def order_algebra(name, signature, labels, leq):
    """Lattice-style algebra on a finite lattice given by its order."""
    n = len(labels)

    def below(x):
        return {y for y in labels if leq(y, x)}

    def meet(x, y):
        common = below(x) & below(y)
        return next(z for z in common if below(z) == common)

    def join(x, y):
        common = {z for z in labels if leq(x, z) and leq(y, z)}
        return next(z for z in common if all(leq(z, w) for w in common))

    top = next(z for z in labels if all(leq(y, z) for y in labels))
    bot = next(z for z in labels if all(leq(z, y) for y in labels))

    def imp(x, y):
        cands = [z for z in labels if leq(meet(x, z), y)]
        return next(z for z in cands if all(leq(w, z) for w in cands))

    fns = {"and": meet, "or": join, "imp": imp, "top": lambda: top, "bot": lambda: bot}
    assert n == len(set(labels))
    return algebra_from_function(name, signature, labels, fns)


def chain(labels):
    return lambda x, y: labels.index(x) <= labels.index(y)


def from_pairs(labels, pairs):
    up = {x: {x} for x in labels}
    changed = True
    for a, b in pairs:
        up[a].add(b)
    while changed:
        changed = False
        for x in labels:
            new = set().union(*(up[y] for y in up[x]))
            if new != up[x]:
                up[x] = new
                changed = True
    return lambda x, y: y in up[x]


M4 = ("0", "a", "b", "1")
M4_LEQ = from_pairs(M4, [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
M3 = ("0", "a", "b", "c", "1")
M3_LEQ = from_pairs(M3, [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])
N5 = ("0", "a", "b", "c", "1")
N5_LEQ = from_pairs(N5, [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
CUBE = tuple(f"{i:03b}" for i in range(8))
CUBE_LEQ = lambda x, y: int(x, 2) & ~int(y, 2) == 0  # noqa: E731

L_TOP_AND = """logic L_TOP_AND {
  connectives: and/2, top/0;
  rule: |- top;
  rule: p, q |- and(p,q);
  rule: and(p,q) |- p;
  rule: and(p,q) |- q;
  assert: congruential has-theorems;
  witness: pc=and(p,q);
}"""

L_AND = """logic L_AND {
  connectives: and/2;
  rule: p, q |- and(p,q);
  rule: and(p,q) |- p;
  rule: and(p,q) |- q;
  assert: congruential;
  witness: pc=and(p,q);
}"""

L_HIL = """logic L_HIL {
  connectives: imp/2;
  rule: p, imp(p,q) |- q;
  rule: |- imp(p,imp(q,p));
  rule: |- imp(imp(p,imp(q,r)),imp(imp(p,q),imp(p,r)));
  assert: congruential filter-distributive has-theorems protoalgebraic;
  witness: ddt=imp(p,q);
}"""

POSITIVE_RULES = """  rule: |- top;
  rule: p, q |- and(p,q);
  rule: and(p,q) |- p;
  rule: and(p,q) |- q;
  rule: p |- or(p,q);
  rule: q |- or(p,q);
  rule: or(p,p) |- p;
  rule: or(p,q) |- or(q,p);
  rule: or(p,or(q,r)) |- or(or(p,q),r);
  rule: or(r,p), or(r,q) |- or(r,and(p,q));
  rule: or(r,and(p,q)) |- or(r,p);
  rule: or(r,and(p,q)) |- or(r,q);"""

HILBERT_RULES = """  rule: p, imp(p,q) |- q;
  rule: |- imp(p,imp(q,p));
  rule: |- imp(imp(p,imp(q,r)),imp(imp(p,q),imp(p,r)));
  rule: |- imp(and(p,q),p);
  rule: |- imp(and(p,q),q);
  rule: |- imp(p,imp(q,and(p,q)));
  rule: |- imp(p,or(p,q));
  rule: |- imp(q,or(p,q));
  rule: |- imp(imp(p,r),imp(imp(q,r),imp(or(p,q),r)));"""

L_POS = f"""logic L_POS {{
  connectives: and/2, or/2, top/0;
{POSITIVE_RULES}
  assert: congruential filter-distributive has-theorems;
  witness: pc=and(p,q);
  witness: pdi=or(p,q);
}}"""

L_HEY = f"""logic L_HEY {{
  connectives: and/2, or/2, imp/2, top/0;
{POSITIVE_RULES}
{HILBERT_RULES}
  assert: congruential filter-distributive has-theorems protoalgebraic;
  witness: pc=and(p,q);
  witness: pdi=or(p,q);
  witness: ddt=imp(p,q);
}}"""

L_BOT = f"""logic L_BOT {{
  connectives: and/2, or/2, imp/2, top/0, bot/0;
{POSITIVE_RULES}
{HILBERT_RULES}
  rule: bot |- p;
  assert: congruential filter-distributive has-theorems protoalgebraic;
  witness: pc=and(p,q);
  witness: pdi=or(p,q);
  witness: ddt=imp(p,q);
  witness: pie=bot;
}}"""


def semilattice(name, labels, leq):
    return print_algebra(order_algebra(name, AND_TOP, labels, leq))


def corpus() -> str:
    A = []
    A.append(semilattice("C2", ("0", "1"), chain(("0", "1"))))
    A.append(semilattice("C3", ("0", "m", "1"), chain(("0", "m", "1"))))
    A.append(semilattice("M4", M4, M4_LEQ))
    A.append(semilattice("M3", M3, M3_LEQ))
    A.append(semilattice("N5", N5, N5_LEQ))
    A.append(semilattice("CUBE", CUBE, CUBE_LEQ))
    A.append(print_algebra(algebra_from_function(
        "D2", AND_TOP, ("0", "1"), {"and": lambda x, y: "1", "top": lambda: "1"})))
    A.append(print_algebra(algebra_from_function(
        "T1", AND_TOP, ("o",), {"and": lambda x, y: "o", "top": lambda: "o"})))
    A.append(print_algebra(order_algebra("H2", IMP, ("0", "1"), chain(("0", "1")))))
    A.append(print_algebra(order_algebra("G3", IMP, ("0", "m", "1"), chain(("0", "m", "1")))))
    A.append(print_algebra(order_algebra("C2L", LATTICE, ("0", "1"), chain(("0", "1")))))
    A.append(print_algebra(order_algebra("M4L", LATTICE, M4, M4_LEQ)))
    A.append(print_algebra(order_algebra("H2H", HEYTING, ("0", "1"), chain(("0", "1")))))
    A.append(print_algebra(order_algebra("C3H", HEYTING, ("0", "m", "1"), chain(("0", "m", "1")))))
    A.append(print_algebra(order_algebra("C3B", HEYTING_BOT, ("0", "m", "1"), chain(("0", "m", "1")))))
    A.append(print_algebra(order_algebra("T1H", HEYTING_BOT, ("o",), chain(("o",)))))
    homs = """hom id_C2 : C2 -> C2 { 0 -> 0; 1 -> 1 }

hom id_C3 : C3 -> C3 { 0 -> 0; m -> m; 1 -> 1 }

hom id_M4 : M4 -> M4 { 0 -> 0; a -> a; b -> b; 1 -> 1 }

hom f : C2 -> M4 { 0 -> 0; 1 -> 1 }

hom g : M4 -> M4 { 0 -> 0; a -> a; b -> 0; 1 -> 1 }

hom swap : M4 -> M4 { 0 -> 0; a -> b; b -> a; 1 -> 1 }

hom k : C3 -> M4 { 0 -> 0; m -> a; 1 -> 1 }

hom p : M4 -> C2 { 0 -> 0; a -> 1; b -> 0; 1 -> 1 }

hom e : C2 -> C3 { 0 -> 0; 1 -> 1 }

hom to_T1 : M4 -> T1 { 0 -> o; a -> o; b -> o; 1 -> o }

hom c : D2 -> M4 { 0 -> 1; 1 -> 1 }

hom id_H2 : H2 -> H2 { 0 -> 0; 1 -> 1 }

hom id_G3 : G3 -> G3 { 0 -> 0; m -> m; 1 -> 1 }

hom u : H2 -> G3 { 0 -> 0; 1 -> 1 }

hom v : G3 -> H2 { 0 -> 0; m -> 1; 1 -> 1 }

hom id_M4L : M4L -> M4L { 0 -> 0; a -> a; b -> b; 1 -> 1 }

hom fL : C2L -> M4L { 0 -> 0; 1 -> 1 }

hom pL : M4L -> C2L { 0 -> 0; a -> 1; b -> 0; 1 -> 1 }

hom id_C3H : C3H -> C3H { 0 -> 0; m -> m; 1 -> 1 }

hom qH : C3H -> H2H { 0 -> 0; m -> 1; 1 -> 1 }

hom uH : H2H -> C3H { 0 -> 0; 1 -> 1 }"""
    suite = """suite full-duality {
  logic L_TOP_AND: C2 C3 M4 CUBE T1;
  logic L_HIL: H2 G3;
  logic L_POS: C2L M4L;
  logic L_HEY: H2H C3H;
  logic L_BOT: C3B T1H;
  homs L_TOP_AND: id_C2 id_C3 id_M4 f g swap k p e to_T1;
  homs L_HIL: id_H2 id_G3 u v;
  homs L_POS: id_M4L fL pL;
  homs L_HEY: id_C3H qH uH;
  checks: filters representation semilattice space morphisms category properties;
}

suite quotients {
  logic L_TOP_AND: C2 M4 D2 T1;
  homs L_TOP_AND: c f id_M4;
  checks: quotient;
}

suite non-distributive {
  logic L_TOP_AND: M3 N5;
  checks: filters representation;
}"""
    logics = [L_TOP_AND, L_HIL, L_POS, L_HEY, L_BOT]
    header = "# Fixture corpus: algebras, logics, homomorphisms and suites.\n\n"
    return header + "\n\n".join(A + logics) + "\n\n" + homs + "\n\n" + suite + "\n"


def m4() -> str:
    parts = [
        semilattice("C2", ("0", "1"), chain(("0", "1"))),
        semilattice("M4", M4, M4_LEQ),
        L_TOP_AND,
        "hom id_M4 : M4 -> M4 { 0 -> 0; a -> a; b -> b; 1 -> 1 }",
        "hom f : C2 -> M4 { 0 -> 0; 1 -> 1 }",
        "hom g : M4 -> M4 { 0 -> 0; a -> a; b -> 0; 1 -> 1 }",
        """suite full-duality {
  logic L_TOP_AND: C2 M4;
  homs L_TOP_AND: id_M4 f g;
  checks: filters representation semilattice space morphisms category properties;
}""",
    ]
    return "\n\n".join(parts) + "\n"


def theorem_free() -> str:
    parts = [
        print_algebra(order_algebra("C2", AND_ONLY, ("0", "1"), chain(("0", "1")))),
        L_AND,
        """suite filters-only {
  logic L_AND: C2;
  checks: filters;
}""",
        """suite full-duality {
  logic L_AND: C2;
  checks: filters representation semilattice space;
}""",
    ]
    return "\n\n".join(parts) + "\n"


if __name__ == "__main__":
    (DATA / "corpus.duals").write_text(corpus(), encoding="utf-8")
    (DATA / "m4.duals").write_text(m4(), encoding="utf-8")
    (DATA / "theorem_free.duals").write_text(theorem_free(), encoding="utf-8")
