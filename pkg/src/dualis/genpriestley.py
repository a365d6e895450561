"""Generalized Priestley spaces and their morphisms, realized on finite discrete carriers.

A relation ``R ⊆ X1 × X2`` is stored as a tuple of masks: ``R[x]`` is the set
``R(x)`` of points of ``X2`` related to ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import bits
from .errors import NotAHomomorphism
from .order import FinitePoset, max_elements, up_sets
from .semilattice import MeetSemilattice, is_meet_homomorphism, sigma

Relation = tuple[int, ...]


@dataclass(frozen=True)
class GenPriestleySpace:
    poset: FinitePoset
    designated: int

    @property
    def size(self) -> int:
        return self.poset.size

    @cached_property
    def admissibles(self) -> tuple[int, ...]:
        """Up-sets whose complement has all its maximal points designated."""
        full = self.poset.full
        return tuple(U for U in up_sets(self.poset)
                     if bits.is_subset(max_elements(self.poset, full & ~U), self.designated))

    def semilattice(self) -> MeetSemilattice:
        return MeetSemilattice.from_sets(self.admissibles, self.poset.full)

    def axiom_failures(self) -> list[tuple]:
        """Finite restatement of the space axioms.

        With the discrete topology every up-set is clopen and density of the
        designated points means they exhaust the carrier.
        """
        out = []
        full, adm = self.poset.full, self.admissibles
        if self.designated != full:
            out.append(("designated-dense", full & ~self.designated))
        for x in range(self.size):
            missing = bits.mask_of(i for i, U in enumerate(adm) if not U >> x & 1)
            directed = bool(missing) and family_up_directed(adm, missing)
            if directed != bool(self.designated >> x & 1):
                out.append(("designated-by-admissibles", x))
        for x in range(self.size):
            for y in range(self.size):
                sep = all(U >> y & 1 for U in adm if U >> x & 1)
                if sep != self.poset.leq(x, y):
                    out.append(("order-by-admissibles", x, y))
        if full not in adm or 0 not in adm:
            out.append(("admissible-bounds",))
        return out


def family_up_directed(family: Sequence[int], chosen: int) -> bool:
    idx = bits.members(chosen)
    return all(any(bits.is_subset(family[i] | family[j], family[k]) for k in idx)
               for i in idx for j in idx)


def gen_priestley_dual(M: MeetSemilattice) -> GenPriestleySpace:
    M.require_distributive()
    points = M.optimal_filters
    n = len(points)
    up = tuple(bits.mask_of(j for j in range(n) if bits.is_subset(points[i], points[j]))
               for i in range(n))
    irr = set(M.irreducible_filters)
    return GenPriestleySpace(FinitePoset(n, up), bits.mask_of(i for i, P in enumerate(points) if P in irr))


def eval_epsilon(X: GenPriestleySpace) -> tuple[int, ...]:
    """``ε(x)``: the admissible sets containing ``x``, as a mask over their indices."""
    return tuple(bits.mask_of(i for i, U in enumerate(X.admissibles) if U >> x & 1)
                 for x in range(X.size))


def epsilon_failures(X: GenPriestleySpace) -> list[tuple]:
    """``ε`` is an order isomorphism onto ``Op(X*)`` taking designated points onto ``Irr(X*)``."""
    M = X.semilattice()
    eps = eval_epsilon(X)
    out = []
    if sorted(eps) != sorted(M.optimal_filters):
        out.append(("onto-optimal",))
    designated = {eps[x] for x in bits.iter_bits(X.designated)}
    if designated != set(M.irreducible_filters):
        out.append(("designated-onto-irreducible",))
    for x in range(X.size):
        for y in range(X.size):
            if X.poset.leq(x, y) != bits.is_subset(eps[x], eps[y]):
                out.append(("order", x, y))
    return out


def box_of_relation(R: Relation, U: int) -> int:
    """``□_R(U) = {x : R(x) ⊆ U}``."""
    return bits.mask_of(x for x, image in enumerate(R) if bits.is_subset(image, U))


def morphism_failures(R: Relation, X1: GenPriestleySpace, X2: GenPriestleySpace) -> list[tuple]:
    out = []
    adm1 = set(X1.admissibles)
    for U in X2.admissibles:
        if box_of_relation(R, U) not in adm1:
            out.append(("box-admissible", U))
    for x in range(X1.size):
        for y in range(X2.size):
            if R[x] >> y & 1:
                continue
            if not any(not U >> y & 1 and bits.is_subset(R[x], U) for U in X2.admissibles):
                out.append(("separation", x, y))
    return out


def is_gen_priestley_morphism(R: Relation, X1: GenPriestleySpace, X2: GenPriestleySpace) -> bool:
    return not morphism_failures(R, X1, X2)


def is_functional(R: Relation, X2: GenPriestleySpace) -> bool:
    """Every ``R(x)`` is a principal up-set ``↑y``."""
    return all(image in X2.poset.up for image in R)


def relation_of_hom(h: Sequence[int], M1: MeetSemilattice, M2: MeetSemilattice) -> Relation:
    """``R_h ⊆ Op(M2) × Op(M1)``: ``(P, Q) ∈ R_h`` iff ``h⁻¹[P] ⊆ Q``."""
    if not is_meet_homomorphism(h, M1, M2):
        raise NotAHomomorphism("map does not preserve meets and top")
    ops1, ops2 = M1.optimal_filters, M2.optimal_filters
    rel = []
    for P in ops2:
        pre = bits.mask_of(a for a in range(M1.size) if P >> h[a] & 1)
        rel.append(bits.mask_of(j for j, Q in enumerate(ops1) if bits.is_subset(pre, Q)))
    return tuple(rel)


def order_relation(X: GenPriestleySpace | FinitePoset) -> Relation:
    poset = X.poset if isinstance(X, GenPriestleySpace) else X
    return poset.up


def star_over(S: Relation, R: Relation, family: Sequence[int], size3: int) -> Relation:
    """``(x, z)`` related iff ``z ∈ U`` for every ``U`` in ``family`` with ``x ∈ □_R(□_S(U))``."""
    out = []
    for x in range(len(R)):
        bound = bits.full(size3)
        for U in family:
            if bits.is_subset(R[x], box_of_relation(S, U)):
                bound &= U
        out.append(bound)
    return tuple(out)


def star_compose(S: Relation, R: Relation, X3: GenPriestleySpace) -> Relation:
    """``S ⋆ R`` for ``R: X1 → X2`` and ``S: X2 → X3``, tested against ``X3*``."""
    return star_over(S, R, X3.admissibles, X3.size)


def compose(R: Relation, S: Relation) -> Relation:
    """Relational composite: first ``R``, then ``S``."""
    return tuple(bits.union_all(S[y] for y in bits.iter_bits(image)) for image in R)


def sigma_box_failures(h: Sequence[int], M1: MeetSemilattice, M2: MeetSemilattice) -> list[int]:
    """Elements ``a`` where ``□_{R_h}(σ1(a)) ≠ σ2(h(a))``."""
    R = relation_of_hom(h, M1, M2)
    s1, s2 = sigma(M1), sigma(M2)
    return [a for a in range(M1.size) if box_of_relation(R, s1.images[a]) != s2.images[h[a]]]
