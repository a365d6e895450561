"""Conjunction, disjunction, deduction-detachment and inconsistent-element properties.

Each property is checked twice: in its transfer form on the algebra (a
statement about generated S-filters) and in its dual form on the S-Priestley
space of the algebra. The directions that would construct a connective from a
dual condition need the infinite formula algebra and are not attempted; what is
checked here are the per-algebra biconditionals.

Witness terms use the variables ``p`` and ``q``; the inconsistent term may use
any variables, since it has to evaluate to one constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from . import bits
from .algebra import FiniteAlgebra, is_homomorphism
from .config import TRANSFER_CAP, carrier_cap
from .errors import CarrierTooLarge, GateError, HypothesisFailure, NotCongruential
from .logic import FilterSystem, LogicPresentation, filter_system, tarski_quotient
from .order import down_closure, max_elements, up_sets
from .priestley import SPriestleyMorphism, SPriestleySpace, dual_relation, dual_space, subfamilies
from .report import Report
from .representation import build_representation, filter_families, s_semilattice
from .terms import App, Term, Var, evaluate, parse_term, variables

PROPERTY_TAGS = ("PC", "PWDI", "PDI", "PDI_single", "uDDT", "PIE")
_DOCUMENT_TAGS = {"pc": "PC", "pdi": "PDI", "ddt": "uDDT", "pie": "PIE"}
_BINARY = ("p", "q")


@dataclass(frozen=True)
class PropertyWitness:
    """A property tag with the term(s) claimed to witness it."""

    tag: str
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.tag not in PROPERTY_TAGS:
            raise ValueError(f"unknown property tag {self.tag!r}")
        if not self.terms:
            raise ValueError(f"{self.tag} needs at least one witness term")
        if self.tag in ("PC", "PDI_single", "uDDT", "PIE") and len(self.terms) != 1:
            raise ValueError(f"{self.tag} takes a single witness term")
        if self.tag != "PIE":
            for t in self.terms:
                extra = set(variables(t)) - set(_BINARY)
                if extra:
                    raise ValueError(f"witness {t} for {self.tag} uses variables {sorted(extra)} "
                                     "beyond p and q")

    @property
    def term(self) -> Term:
        return self.terms[0]


def witness(L: LogicPresentation, tag: str, w=None) -> PropertyWitness | None:
    """Normalise ``w`` (a witness, a term, its text, or a sequence of these) for ``tag``.

    With ``w`` omitted the logic's own witness is used; None if it has none.
    """
    if isinstance(w, PropertyWitness):
        return w
    if w is None:
        doc_tag = {v: k for k, v in _DOCUMENT_TAGS.items()}.get(tag, tag.lower())
        if tag == "PDI_single":
            doc_tag = "pdi"
        terms = L.witness(doc_tag)
        if terms is None:
            return None
    elif isinstance(w, (str, Var, App)):
        terms = (w,)
    else:
        terms = tuple(w)
    terms = tuple(parse_term(t, L.signature) if isinstance(t, str) else t for t in terms)
    if tag == "PDI" and len(terms) == 1:
        tag = "PDI_single"
    return PropertyWitness(tag, terms)


def _binary(t: Term, A: FiniteAlgebra):
    def op(a: int, b: int) -> int:
        return evaluate(t, A, {"p": a, "q": b})
    return op


def _require_transfer_size(A: FiniteAlgebra) -> None:
    cap = carrier_cap(TRANSFER_CAP)
    if A.size > cap:
        raise CarrierTooLarge(A.size, cap, "algebra for an exhaustive transfer check")


def _dual_or_reason(L: LogicPresentation, A: FiniteAlgebra) -> tuple[SPriestleySpace | None, str]:
    try:
        return dual_space(L, A), ""
    except (GateError, HypothesisFailure) as exc:
        return None, str(exc)


def _missing(rep: Report, tag: str) -> Report:
    rep.check("witness-present", f"a {tag} witness term is supplied").record(
        False, reason=f"logic has no {tag} witness")
    return rep


def admissible_up_sets(space: SPriestleySpace) -> tuple[int, ...]:
    """Up-sets ``U`` with ``max(U^c) ⊆ X_B``."""
    P = space.poset
    return tuple(U for U in up_sets(P)
                 if bits.is_subset(max_elements(P, P.full & ~U), space.xb))


def arrow(space: SPriestleySpace, U: int, V: int) -> int:
    """``(↓(U ∩ V^c))^c``."""
    return space.full & ~down_closure(space.poset, U & ~V)


# conjunction


def check_pc(L: LogicPresentation, w, A: FiniteAlgebra) -> Report:
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: conjunction")
    wit = witness(L, "PC", w)
    if wit is None:
        return _missing(rep, "PC")
    meet = _binary(wit.term, A)
    lab = A.names

    c = rep.check("pc-transfer", f"Fg({wit.term}) = Fg(p, q) for all elements p, q")
    for a, b in product(range(A.size), repeat=2):
        c.record(fs.fg(1 << meet(a, b)) == fs.fg(1 << a | 1 << b), a=lab[a], b=lab[b])

    space, reason = _dual_or_reason(L, A)
    dual_ids = [("phi-preserves-meet", "φ(a) ∩ φ(b) = φ(a ∧ b)"),
                ("phi-image-is-admissible", "φ[A] is exactly the X_B-admissible up-sets of the dual"),
                ("meet-generates-same-filter", "U ∩ V ∈ B and Fg(U, V) = Fg(U ∩ V) on the dual"),
                ("semilattice-is-algebra", "M(A) is isomorphic to ⟨A, ∧, 1⟩ through φ")]
    if space is None:
        for cid, stmt in dual_ids:
            rep.skip(cid, stmt, reason)
        return rep
    sets = space.sets

    c = rep.check(*dual_ids[0])
    for a, b in product(range(A.size), repeat=2):
        c.record(sets[a] & sets[b] == sets[meet(a, b)], a=lab[a], b=lab[b])

    c = rep.check(*dual_ids[1])
    adm = set(admissible_up_sets(space))
    for U in sorted(adm | set(sets)):
        c.record((U in adm) == (U in sets), U=bits.format_mask(U, space.labels))

    c = rep.check(*dual_ids[2])
    sfs = space.filters
    for i, j in product(range(len(sets)), repeat=2):
        k = space.index_of(sets[i] & sets[j])
        c.record(k is not None and sfs.fg(1 << i | 1 << j) == sfs.fg(1 << k), U=lab[i], V=lab[j])

    c = rep.check(*dual_ids[3])
    sm = s_semilattice(L, A)
    c.record(len(sm.members) == A.size, members=len(sm.members), elements=A.size)
    if len(sm.members) == A.size:
        el, M = sm.element, sm.lattice
        for a, b in product(range(A.size), repeat=2):
            c.record(el[meet(a, b)] == M.meet[el[a]][el[b]], a=lab[a], b=lab[b])
        for t in bits.iter_bits(fs.fg(0)):
            c.record(el[t] == M.top, top=lab[t])
    return rep


# disjunction


def _nabla(wit: PropertyWitness, A: FiniteAlgebra):
    ops = [_binary(t, A) for t in wit.terms]

    def nabla(a: int, b: int) -> int:
        return bits.mask_of(f(a, b) for f in ops)
    return nabla


def _intersection_of_points(fs: FilterSystem, family: Sequence[int], points: int) -> int:
    return bits.intersect_all((family[j] for j in bits.iter_bits(points)), fs.full)


def check_pdi(L: LogicPresentation, w, A: FiniteAlgebra, homs=()) -> Report:
    """Disjunction on ``A`` and on the duals of ``homs`` (``(name, map, source, target)`` tuples)."""
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: disjunction")
    wit = witness(L, "PDI", w)
    if wit is None:
        return _missing(rep, "PDI")
    _require_transfer_size(A)
    nabla = _nabla(wit, A)
    lab = A.names
    shown = ", ".join(str(t) for t in wit.terms)

    c = rep.check("pdi-transfer", f"Fg(X, ∇(a, b)) = Fg(X, a) ∩ Fg(X, b) for every X, with ∇ = {{{shown}}}")
    for X in range(1 << A.size):
        for a, b in product(range(A.size), repeat=2):
            lhs = fs.fg(X | nabla(a, b))
            rhs = fs.fg(X | 1 << a) & fs.fg(X | 1 << b)
            c.record(lhs == rhs, X=bits.format_mask(X, lab), a=lab[a], b=lab[b])

    irr = set(fs.irreducible)
    c = rep.check("irreducible-by-disjunction",
                  "a proper S-filter is irreducible iff ∇(a, b) ⊆ F implies a ∈ F or b ∈ F")
    for F in fs.filters:
        if F == fs.full:
            continue
        prime = all(not bits.is_subset(nabla(a, b), F) or F >> a & 1 or F >> b & 1
                    for a, b in product(range(A.size), repeat=2))
        c.record(prime == (F in irr), F=bits.format_mask(F, lab))

    c = rep.check("optimal-equals-irreducible", "every optimal S-filter is irreducible")
    c.record(set(fs.optimal) == irr, optimal=len(fs.optimal), irreducible=len(irr))

    single = len(wit.terms) == 1
    space, reason = _dual_or_reason(L, A)
    if single:
        join = _binary(wit.term, A)
        stmt = f"φ(a) ∪ φ(b) = φ({wit.term})"
        if space is None:
            rep.skip("phi-preserves-join", stmt, reason)
        else:
            c = rep.check("phi-preserves-join", stmt)
            for a, b in product(range(A.size), repeat=2):
                c.record(space.sets[a] | space.sets[b] == space.sets[join(a, b)], a=lab[a], b=lab[b])

    e2 = rep.check("dual-irreducible-points",
                   "every x ∈ X_B1 has y ∈ X_B2 lying in exactly the members U ⊇ R_h(x)")
    e3 = rep.check("dual-functional", "every R_h(x) is a principal up-set ↑y")
    pre = rep.check("irreducible-preimage",
                    "h⁻¹[G] is irreducible for every irreducible G, and equals ⋂R_h(G)")
    agree = rep.check("irreducible-preimage-dual",
                      "⋂R_h(G) ∈ Irr_S(A₁) iff h⁻¹[G] ∈ Irr_S(A₁)")
    split = rep.check("dual-splits-unions",
                      "R_h(P) ⊆ φ(a) ∪ φ(b) implies R_h(P) ⊆ φ(a) or R_h(P) ⊆ φ(b)")
    if not single:
        split.skipped = "∇ has more than one term"
    for name, h, A1, A2 in homs:
        sp1, why1 = _dual_or_reason(L, A1)
        sp2, why2 = _dual_or_reason(L, A2)
        if sp1 is None or sp2 is None:
            for chk in (e2, e3, pre, agree, split):
                chk.record(False, hom=name, reason=why1 or why2)
            continue
        R = dual_relation(h, A1, A2, L)
        for x in bits.iter_bits(sp2.xb):
            e2.record(any(all(bool(U >> y & 1) == bits.is_subset(R[x], U) for U in sp1.sets)
                          for y in bits.iter_bits(sp1.xb)), hom=name, x=sp2.point(x))
        for x in range(sp2.size):
            e3.record(R[x] in sp1.poset.up, hom=name, x=sp2.point(x))
        fs1, fs2 = filter_system(L, A1), filter_system(L, A2)
        irr1 = set(fs1.irreducible)
        ops1 = build_representation(L, fs1.algebra).base.family
        ops2 = build_representation(L, fs2.algebra).base.family
        for x, G in enumerate(ops2):
            if G not in fs2.irreducible:
                continue
            inverse = bits.mask_of(a for a in range(fs1.size) if G >> h[a] & 1)
            meet = _intersection_of_points(fs1, ops1, R[x])
            pre.record(inverse in irr1 and inverse == meet, hom=name, G=sp2.point(x))
            agree.record((meet in irr1) == (inverse in irr1), hom=name, G=sp2.point(x))
        if single:
            phi = sp1.sets
            for x, a, b in product(range(sp2.size), range(fs1.size), range(fs1.size)):
                if bits.is_subset(R[x], phi[a] | phi[b]):
                    split.record(bits.is_subset(R[x], phi[a]) or bits.is_subset(R[x], phi[b]),
                                 hom=name, P=sp2.point(x), a=A1.label(a), b=A1.label(b))
    return rep


def union_closure_failures(space: SPriestleySpace) -> list[tuple[int, int]]:
    """Pairs of member indices whose union is not a member."""
    n = len(space.sets)
    return [(i, j) for i in range(n) for j in range(i + 1, n)
            if space.index_of(space.sets[i] | space.sets[j]) is None]


def _splits(R, x: int, target: SPriestleySpace) -> list[tuple[int, int]]:
    out = []
    for (i, U), (j, V) in product(enumerate(target.sets), repeat=2):
        if bits.is_subset(R[x], U | V) and not (bits.is_subset(R[x], U) or bits.is_subset(R[x], V)):
            out.append((i, j))
    return out


def check_pdi_single_dual(space: SPriestleySpace, morphisms: Iterable[SPriestleyMorphism] = ()) -> Report:
    """Dual form of disjunction by a single term: ``B`` closed under union and morphisms splitting unions."""
    space.require_verified()
    rep = Report(f"{space.name or 'space'}: disjunction on the dual")
    lab = space.algebra.names
    sets = space.sets
    morphisms = list(morphisms)

    c = rep.check("union-closed", "U ∪ V ∈ B for all U, V ∈ B")
    bad = union_closure_failures(space)
    for i, j in bad:
        c.record(False, U=lab[i], V=lab[j],
                 union=bits.format_mask(sets[i] | sets[j], space.labels))
    if not bad:
        c.record(True)
    else:
        why = "B is not closed under union"
        rep.skip("union-generates-meet", "Fg(W, U) ∩ Fg(W, V) = Fg(W, U ∪ V)", why)
        rep.skip("irreducible-by-union", "F is irreducible iff U ∪ V ∈ F implies U ∈ F or V ∈ F", why)
        rep.skip("morphism-splits-unions", "R(x) ⊆ U ∪ V implies R(x) ⊆ U or R(x) ⊆ V", why)
        rep.skip("splitting-gives-irreducible-points",
                 "morphisms that split unions satisfy the irreducible-point condition", why)
        return rep

    fs = space.filters
    n = len(sets)
    union = {(i, j): space.index_of(sets[i] | sets[j]) for i in range(n) for j in range(n)}

    c = rep.check("union-generates-meet", "Fg(W, U) ∩ Fg(W, V) = Fg(W, U ∪ V)")
    for W in subfamilies(n, nonempty=False):
        for i, j in product(range(n), repeat=2):
            c.record(fs.fg(W | 1 << i) & fs.fg(W | 1 << j) == fs.fg(W | 1 << union[i, j]),
                     W=bits.format_mask(W, lab), U=lab[i], V=lab[j])

    c = rep.check("irreducible-by-union", "a proper S-filter F of B is irreducible iff "
                                          "U ∪ V ∈ F implies U ∈ F or V ∈ F")
    irr = set(fs.irreducible)
    for F in fs.filters:
        if F == fs.full:
            continue
        prime = all(not F >> union[i, j] & 1 or F >> i & 1 or F >> j & 1
                    for i, j in product(range(n), repeat=2))
        c.record(prime == (F in irr), F=bits.format_mask(F, lab))

    sp = rep.check("morphism-splits-unions", "R(x) ⊆ U ∪ V implies R(x) ⊆ U or R(x) ⊆ V")
    e2 = rep.check("splitting-gives-irreducible-points",
                   "when both families are union-closed and R splits unions, every x ∈ X_B1 has "
                   "y ∈ X_B2 lying in exactly the members U ⊇ R(x)")
    for k, m in enumerate(morphisms):
        R, X1, X2 = m.relation, m.source, m.target
        fails = [(x, s) for x in range(X1.size) for s in _splits(R, x, X2)]
        for x, (i, j) in fails:
            sp.record(False, morphism=k, x=X1.point(x), U=X2.algebra.label(i), V=X2.algebra.label(j))
        if not fails:
            sp.record(True, morphism=k)
        if fails or union_closure_failures(X1) or union_closure_failures(X2):
            continue
        for x in bits.iter_bits(X1.xb):
            e2.record(any(all(bool(U >> y & 1) == bits.is_subset(R[x], U) for U in X2.sets)
                          for y in bits.iter_bits(X2.xb)), morphism=k, x=X1.point(x))
    return rep


# deduction-detachment


def check_uddt(L: LogicPresentation, w, A: FiniteAlgebra) -> Report:
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: deduction-detachment")
    wit = witness(L, "uDDT", w)
    if wit is None:
        return _missing(rep, "uDDT")
    _require_transfer_size(A)
    imp = _binary(wit.term, A)
    lab = A.names

    c = rep.check("ddt-transfer", f"b ∈ Fg(X, a) iff {wit.term} ∈ Fg(X) for every X, with p = a, q = b")
    for X in range(1 << A.size):
        base = fs.fg(X)
        for a, b in product(range(A.size), repeat=2):
            c.record(bool(fs.fg(X | 1 << a) >> b & 1) == bool(base >> imp(a, b) & 1),
                     X=bits.format_mask(X, lab), a=lab[a], b=lab[b])

    c = rep.check("protoalgebraic-asserted", "the presentation asserts protoalgebraicity")
    c.record(L.asserts("protoalgebraic"), logic=L.name)

    c = rep.check("filter-distributive", "the S-filters of A form a distributive lattice")
    c.record(fs.is_filter_distributive, algebra=A.name)

    c = rep.check("compact-meet-distributive",
                  "Fg(B₀) ⊔ ⋂Gᵢ = ⋂(Fg(B₀) ⊔ Gᵢ) for finite B₀ and families of S-filters")
    # every S-filter of a finite algebra is Fg(B₀) for a finite B₀
    for F in fs.filters:
        for family in filter_families(fs, nonempty=True):
            lhs = fs.join(F, bits.intersect_all(family, fs.full))
            rhs = bits.intersect_all((fs.join(F, G) for G in family), fs.full)
            c.record(lhs == rhs, F=bits.format_mask(F, lab),
                     family=[bits.format_mask(G, lab) for G in family])

    space, reason = _dual_or_reason(L, A)
    dual_ids = [("phi-preserves-implication", f"(↓(φ(a) ∩ φ(b)^c))^c = φ({wit.term})"),
                ("arrow-closed", "(↓(U ∩ V^c))^c ∈ B for all U, V ∈ B"),
                ("arrow-detaches", "V ∈ Fg(W, U) iff (↓(U ∩ V^c))^c ∈ Fg(W)")]
    if space is None:
        for cid, stmt in dual_ids:
            rep.skip(cid, stmt, reason)
        return rep
    sets = space.sets
    n = len(sets)

    c = rep.check(*dual_ids[0])
    for a, b in product(range(A.size), repeat=2):
        c.record(arrow(space, sets[a], sets[b]) == sets[imp(a, b)], a=lab[a], b=lab[b])

    c = rep.check(*dual_ids[1])
    arrows = {}
    for i, j in product(range(n), repeat=2):
        arrows[i, j] = space.index_of(arrow(space, sets[i], sets[j]))
        c.record(arrows[i, j] is not None, U=lab[i], V=lab[j])

    if not c.passed:
        rep.skip(*dual_ids[2], "B is not closed under the arrow operation")
        return rep
    c = rep.check(*dual_ids[2])
    sfs = space.filters
    for W in subfamilies(n, nonempty=False):
        gen = sfs.fg(W)
        for i, j in product(range(n), repeat=2):
            c.record(bool(sfs.fg(W | 1 << i) >> j & 1) == bool(gen >> arrows[i, j] & 1),
                     W=bits.format_mask(W, lab), U=lab[i], V=lab[j])
    return rep


# inconsistent element


def closed_term_values(A: FiniteAlgebra, signature) -> int:
    """Values of closed terms: the subalgebra generated by the constants."""
    ops = [(op, ar) for op, ar in signature.connectives]
    out = bits.mask_of(A.apply(op) for op, ar in ops if ar == 0)
    changed = True
    while changed:
        changed = False
        for op, ar in ops:
            if ar == 0:
                continue
            for args in product(bits.members(out), repeat=ar):
                v = A.apply(op, *args)
                if not out >> v & 1:
                    out |= 1 << v
                    changed = True
    return out


def check_pie(L: LogicPresentation, w, A: FiniteAlgebra) -> Report:
    """Inconsistent element on ``A``; without a witness term the closed-term values are tried."""
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: inconsistent element")
    wit = witness(L, "PIE", w)
    lab = A.names

    c = rep.check("pie-transfer", "the inconsistent term generates the whole algebra")
    if wit is not None:
        vs = variables(wit.term)
        values = set()
        for vals in product(range(A.size), repeat=len(vs)):
            v = evaluate(wit.term, A, dict(zip(vs, vals)))
            values.add(v)
            c.record(fs.fg(1 << v) == fs.full, assignment=dict(zip(vs, (lab[x] for x in vals))))
        k = rep.check("constant-term", f"{wit.term} takes a single value")
        k.record(len(values) <= 1, values=sorted(lab[v] for v in values))
        zero = values.pop() if len(values) == 1 else None
    else:
        closed = closed_term_values(A, L.signature)
        c.record(any(fs.fg(1 << v) == fs.full for v in bits.iter_bits(closed)),
                 reason="no closed term denotes an element generating A",
                 closed_values=bits.format_mask(closed, lab))
        rep.skip("constant-term", "the inconsistent term takes a single value", "no witness term")
        whole = [a for a in range(A.size) if fs.principal[a] == fs.full]
        zero = whole[0] if whole else None

    space, reason = _dual_or_reason(L, A)
    dual_ids = [("bottom-is-empty", "φ(0) = ∅ ⊆ φ(a) for the inconsistent element 0"),
                ("empty-member", "∅ ∈ B"),
                ("designated-below-everything", "↓X_B = X, i.e. max(X) ⊆ X_B")]
    if space is None:
        for cid, stmt in dual_ids:
            rep.skip(cid, stmt, reason)
        return rep

    c = rep.check(*dual_ids[0])
    if zero is None:
        c.record(False, reason="no element generates the whole algebra")
    else:
        c.record(space.sets[zero] == 0, zero=lab[zero])

    c = rep.check(*dual_ids[1])
    c.record(0 in space.sets)

    if L.witness("pc") is None:
        rep.skip(*dual_ids[2], "needs a conjunction witness as well")
    else:
        c = rep.check(*dual_ids[2])
        c.record(down_closure(space.poset, space.xb) == space.full,
                 missing=bits.format_mask(max_elements(space.poset, space.full) & ~space.xb,
                                          space.labels))
    return rep


# quotients


def _irreducible(fs: FilterSystem) -> set[int]:
    return set(fs.irreducible_by_definition)


def quotient_transfer_check(L: LogicPresentation, A, homs=()) -> Report:
    """Quotients by ``≡_S`` for arbitrary algebras and the maps they induce on homomorphisms.

    ``A`` is one algebra or several; ``homs`` holds ``(name, map, source, target)`` tuples.
    """
    algebras = [A] if isinstance(A, FiniteAlgebra) else list(A)
    rep = Report(f"{L.name}: quotients")

    c = rep.check("quotient-filter-isomorphism",
                  "F ↦ π[F] is a lattice isomorphism Fi_S(A) → Fi_S(A/≡) with inverse π⁻¹[·]")
    s = rep.check("quotient-is-s-algebra", "A/≡ is an S-algebra")
    irr = rep.check("quotient-irreducible", "G is irreducible iff π[G] is")
    for B in algebras:
        fs = filter_system(L, B)
        try:
            q = tarski_quotient(L, B)
        except NotCongruential as exc:
            c.record(False, algebra=B.name, reason=str(exc), witness=exc.witness)
            continue
        c.record(not q.filter_bijection_failures, algebra=B.name,
                 failures=list(q.filter_bijection_failures)[:3])
        qs = filter_system(L, q.algebra)
        s.record(qs.is_s_algebra, algebra=B.name)
        image = {F: bits.mask_of(q.projection[a] for a in bits.iter_bits(F)) for F in fs.filters}
        for F, G in product(fs.filters, repeat=2):
            c.record(bits.is_subset(F, G) == bits.is_subset(image[F], image[G]), algebra=B.name)
        qirr = _irreducible(qs)
        for F in fs.filters:
            irr.record((F in _irreducible(fs)) == (image[F] in qirr), algebra=B.name,
                       F=bits.format_mask(F, fs.algebra.labels))

    well = rep.check("induced-map-well-defined", "a ≡ a′ implies h(a) ≡ h(a′)")
    hom = rep.check("induced-map-homomorphism", "h′ is a homomorphism A/≡ → B/≡")
    square = rep.check("quotient-square-commutes", "h′ ∘ π_A = π_B ∘ h")
    chain = rep.check("irreducible-preimage-chain",
                      "π_A⁻¹[h′⁻¹[π_B[G]]] = h⁻¹[G] for irreducible G, and it is irreducible in A "
                      "iff h′⁻¹[π_B[G]] is irreducible in A/≡")
    for name, h, A1, A2 in homs:
        try:
            q1, q2 = tarski_quotient(L, A1), tarski_quotient(L, A2)
        except NotCongruential as exc:
            well.record(False, hom=name, reason=str(exc))
            continue
        p1, p2 = q1.projection, q2.projection
        first: dict[int, int] = {}
        for a in range(A1.size):
            first.setdefault(p1[a], a)
        h_q = tuple(p2[h[first[k]]] for k in range(q1.algebra.size))
        for a, b in product(range(A1.size), repeat=2):
            if p1[a] == p1[b]:
                well.record(p2[h[a]] == p2[h[b]], hom=name, a=A1.label(a), b=A1.label(b))
        hom.record(is_homomorphism(h_q, q1.algebra, q2.algebra), hom=name)
        for a in range(A1.size):
            square.record(h_q[p1[a]] == p2[h[a]], hom=name, a=A1.label(a))
        fs1, fs2 = filter_system(L, A1), filter_system(L, A2)
        qs1 = filter_system(L, q1.algebra)
        irr1, qirr1 = _irreducible(fs1), _irreducible(qs1)
        for G in sorted(_irreducible(fs2)):
            piG = bits.mask_of(p2[b] for b in bits.iter_bits(G))
            back_q = bits.mask_of(k for k in range(q1.algebra.size) if piG >> h_q[k] & 1)
            back = bits.mask_of(a for a in range(A1.size) if back_q >> p1[a] & 1)
            direct = bits.mask_of(a for a in range(A1.size) if G >> h[a] & 1)
            chain.record(back == direct and (direct in irr1) == (back_q in qirr1),
                         hom=name, G=bits.format_mask(G, A2.labels))
    return rep
