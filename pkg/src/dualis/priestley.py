"""S-Priestley spaces and morphisms on finite carriers, and the dual equivalence with S-algebras.

A finite space carries the discrete topology, so compactness is automatic,
every up-set is clopen and density of ``X_B`` means ``X_B = X``. The axiom
checkers below are written against those finite restatements.

The family ``B`` is stored as ``sets``: element ``i`` of the algebra on ``B``
is the subset ``sets[i]`` of the points. Relations are tuples of masks as in
:mod:`dualis.genpriestley`, so ``R[x]`` is ``R(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product

from . import bits
from .algebra import FiniteAlgebra, homomorphism_failure, is_homomorphism
from .errors import GateError, HypothesisFailure, NotAHomomorphism, NotAPartialOrder, NotVerified
from .genpriestley import (GenPriestleySpace, Relation, box_of_relation, compose,
                           family_up_directed, morphism_failures, star_over)
from .logic import FilterSystem, LogicPresentation, filter_system
from .order import FinitePoset, max_elements, up_sets
from .report import Report
from .representation import build_representation, s_semilattice
from .semilattice import MeetSemilattice, distributive_envelope, sup_homomorphism_failure

THEOREMS_REQUIRED = "theorems required: dualization needs a logic with theorems"
ALL_SUBSETS_UP_TO = 6
SMALL_FAMILY = 2


def subfamilies(n: int, nonempty: bool = True):
    """Sub-families of an ``n``-member family as masks; all of them when ``n`` is small."""
    if n <= ALL_SUBSETS_UP_TO:
        yield from range(1 if nonempty else 0, 1 << n)
        return
    if not nonempty:
        yield 0
    for k in range(1, SMALL_FAMILY + 1):
        for combo in combinations(range(n), k):
            yield bits.mask_of(combo)


@dataclass(frozen=True)
class SPriestleySpace:
    logic: LogicPresentation
    size: int
    sets: tuple[int, ...]
    algebra: FiniteAlgebra
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.sets) != self.algebra.size:
            raise ValueError("the algebra must have one element per member of B")
        if len(set(self.sets)) != len(self.sets):
            raise ValueError("members of B must be distinct sets")
        if any(U & ~self.full for U in self.sets):
            raise ValueError("members of B must be subsets of the carrier")

    @property
    def full(self) -> int:
        return bits.full(self.size)

    def point(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def meet_of(self, V: int) -> int:
        """``⋂V`` for a mask ``V`` over member indices."""
        return bits.intersect_all((self.sets[i] for i in bits.iter_bits(V)), self.full)

    def index_of(self, U: int) -> int | None:
        try:
            return self.sets.index(U)
        except ValueError:
            return None

    @cached_property
    def quasi_up(self) -> tuple[int, ...]:
        """``{y : x ⪯ y}``: the points lying in every member that contains ``x``."""
        return tuple(self.meet_of(self.xi[x]) for x in range(self.size))

    @cached_property
    def is_reduced(self) -> bool:
        return all(not (self.quasi_up[x] >> y & 1 and self.quasi_up[y] >> x & 1)
                   for x in range(self.size) for y in range(x + 1, self.size))

    @cached_property
    def poset(self) -> FinitePoset:
        if not self.is_reduced:
            raise NotAPartialOrder("the referential algebra is not reduced")
        return FinitePoset(self.size, self.quasi_up)

    @cached_property
    def xi(self) -> tuple[int, ...]:
        """``ξ(x)``: the members of ``B`` containing ``x``, as a mask over member indices."""
        return tuple(bits.mask_of(i for i, U in enumerate(self.sets) if U >> x & 1)
                     for x in range(self.size))

    @cached_property
    def xb(self) -> int:
        """Points whose non-containing members form a non-empty up-directed family."""
        every = bits.full(len(self.sets))
        return bits.mask_of(x for x in range(self.size)
                            if every & ~self.xi[x] and
                            family_up_directed(self.sets, every & ~self.xi[x]))

    @cached_property
    def filters(self) -> FilterSystem:
        return filter_system(self.logic, self.algebra)

    @cached_property
    def report(self) -> Report:
        return verify_space(self)

    def require_verified(self) -> None:
        if not self.report.ok:
            raise NotVerified(self.report.summary())

    def gen_priestley(self) -> GenPriestleySpace:
        return GenPriestleySpace(self.poset, self.xb)


def _quasi_up_sets(space: SPriestleySpace) -> tuple[int, ...]:
    up = space.quasi_up
    return tuple(U for U in range(1 << space.size)
                 if all(bits.is_subset(up[x], U) for x in bits.iter_bits(U)))


def verify_space(space: SPriestleySpace) -> Report:
    """Axioms of an S-Priestley space, the alternate axiom set and the basic facts about ``B``."""
    rep = Report(f"{space.name or 'space'}: axioms")
    fs = space.filters
    n, full = len(space.sets), space.full
    lab = space.algebra.names

    def fam(V):
        return bits.format_mask(V, lab)

    c = rep.check("reduced", "the quasiorder induced by B is antisymmetric")
    for x, y in combinations(range(space.size), 2):
        c.record(not (space.quasi_up[x] >> y & 1 and space.quasi_up[y] >> x & 1),
                 x=space.point(x), y=space.point(y))
    sound = rep.check("rules-sound", "every presented rule is sound in B read as sets")
    for prem, concl in fs.instances:
        sound.record(bits.is_subset(space.meet_of(prem), space.sets[concl]),
                     premises=fam(prem), conclusion=space.algebra.label(concl))

    gen = rep.check("finite-generation", "for non-empty finite V ⊆ B, ⋂V ⊆ U implies U ∈ Fg(V)")
    conv = rep.check("generation-sound", "for non-empty finite V ⊆ B, U ∈ Fg(V) implies ⋂V ⊆ U")
    for V in subfamilies(n):
        meet, F = space.meet_of(V), fs.fg(V)
        for i, U in enumerate(space.sets):
            if bits.is_subset(meet, U):
                gen.record(bool(F >> i & 1), V=fam(V), U=lab[i])
            if F >> i & 1:
                conv.record(bits.is_subset(meet, U), V=fam(V), U=lab[i])

    c = rep.check("carrier-in-family", "X belongs to B")
    c.record(full in space.sets)
    c = rep.check("members-are-up-sets", "every member of B is an up-set")
    for i, U in enumerate(space.sets):
        c.record(all(bits.is_subset(space.quasi_up[x], U) for x in bits.iter_bits(U)), U=lab[i])
    c = rep.check("designated-points-dense", "X_B is all of X")
    for x in range(space.size):
        c.record(bool(space.xb >> x & 1), x=space.point(x))
    primary = all(c.passed for c in rep.checks)

    alt = Report("alternate")
    c = alt.check("finite-generation-with-empty",
                  "for finite V ⊆ B including ∅, ⋂V ⊆ U implies U ∈ Fg(V)")
    F0 = fs.fg(0)
    for i, U in enumerate(space.sets):
        if U == full:
            c.record(bool(F0 >> i & 1), U=lab[i])
    c = alt.check("subbasis-discrete",
                  "B together with complements of members separates every point")
    for x in range(space.size):
        cell = full
        for U in space.sets:
            cell &= U if U >> x & 1 else full & ~U
        c.record(cell == 1 << x, x=space.point(x))
    c = alt.check("clopen-up-sets-described", "X ∈ B and the up-sets are B^∩∪ together with ∅")
    closure = set(bits.union_closure(bits.intersection_closure(space.sets + (full,)))) | {0}
    c.record(full in space.sets and set(_quasi_up_sets(space)) == closure)
    alternate = sound.passed and gen.passed and all(c.passed for c in alt.checks) \
        and rep.get("designated-points-dense").passed
    rep.extend(alt)
    c = rep.check("alternate-axioms-agree", "both axiom sets accept or both reject")
    c.record(primary == alternate, primary=primary, alternate=alternate)

    c = rep.check("specialization-is-inclusion",
                  "for non-empty U and any V: ⋂U ⊆ ⋂V iff Fg(V) ⊆ Fg(U); on members V ⊆ U iff U ∈ Fg(V)")
    for i, j in product(range(n), repeat=2):
        c.record(bits.is_subset(space.sets[j], space.sets[i]) == bool(fs.principal[j] >> i & 1),
                 U=lab[i], V=lab[j])
    for U, V in product(list(subfamilies(n)), list(subfamilies(n, nonempty=False))):
        c.record(bits.is_subset(space.meet_of(U), space.meet_of(V)) ==
                 bits.is_subset(fs.fg(V), fs.fg(U)), U=fam(U), V=fam(V))

    c = rep.check("bottom-element-iff-empty-member", "B has a least element iff ∅ ∈ B")
    has_bottom = any(p == fs.full for p in fs.principal)
    c.record(has_bottom == (0 in space.sets))
    c = rep.check("bottom-family-iff-empty-meet",
                  "B has a bottom-family iff some finite D ⊆ B has ⋂D = ∅")
    c.record((fs.bottom_family is not None) == (space.meet_of(bits.full(n)) == 0))
    c = rep.check("bottom-family-meet-empty", "every bottom-family of B has empty intersection")
    for D in subfamilies(n):
        if fs.fg(D) == fs.full:
            c.record(space.meet_of(D) == 0, D=fam(D))

    if primary and fs.is_filter_distributive and space.size:
        c = rep.check("three-way-cover",
                      "⋂V ⊆ ⋃⋂U_i iff ⋂Fg(U_i) ⊆ Fg(V) iff φ̂(V) ⊆ ⋃φ̂(U_i)")
        R = build_representation(space.logic, space.algebra)
        singles = list(subfamilies(n))
        for Us in bits.small_families(tuple(singles), SMALL_FAMILY):
            cover = bits.union_all(space.meet_of(U) for U in Us)
            common = bits.intersect_all((fs.fg(U) for U in Us), fs.full)
            hats = bits.union_all(R.phi_hat(U) for U in Us)
            for V in singles:
                a = bits.is_subset(space.meet_of(V), cover)
                b = bits.is_subset(common, fs.fg(V))
                d = bits.is_subset(R.phi_hat(V), hats)
                c.record(a == b == d, Us=[fam(U) for U in Us], V=fam(V))
    else:
        rep.skip("three-way-cover", "⋂V ⊆ ⋃⋂U_i iff ⋂Fg(U_i) ⊆ Fg(V) iff φ̂(V) ⊆ ⋃φ̂(U_i)",
                 "needs a valid non-empty space over a filter-distributive algebra")
    return rep


def reduced_from_clopen_description(poset: FinitePoset, sets) -> bool | None:
    """If ``X ∈ B`` and the up-sets are exactly ``B^∩∪ ∪ {∅}``, whether ``B`` induces the order.

    Returns None when the hypothesis does not hold.
    """
    full = poset.full
    sets = tuple(sets)
    if full not in sets or any(not all(bits.is_subset(poset.up[x], U) for x in bits.iter_bits(U))
                               for U in sets):
        return None
    closure = set(bits.union_closure(bits.intersection_closure(sets + (full,)))) | {0}
    if closure != set(up_sets(poset)):
        return None
    induced = tuple(bits.intersect_all((U for U in sets if U >> x & 1), full)
                    for x in range(poset.size))
    return induced == poset.up


@lru_cache(maxsize=None)
def dual_space(L: LogicPresentation, A: FiniteAlgebra) -> SPriestleySpace:
    """``⟨Op_S(A), φ[A]⟩``; the algebra on ``B`` is ``A`` itself with element ``a`` read as ``φ(a)``."""
    if not L.has_theorems:
        raise GateError(THEOREMS_REQUIRED)
    fs = filter_system(L, A)
    A = fs.algebra
    failed = [name for name, ok in (("congruential", fs.is_congruential),
                                    ("s-algebra", fs.is_s_algebra),
                                    ("filter-distributive", fs.is_filter_distributive)) if not ok]
    if failed:
        raise HypothesisFailure(f"{A.name} does not meet the duality hypotheses", failed)
    R = build_representation(L, A)
    labels = tuple("{" + ",".join(map(str, bits.format_mask(P, A.labels))) + "}"
                   for P in R.base.family)
    space = SPriestleySpace(L, len(R.base.family), R.phi, A, labels, f"Dp({A.name})")
    if not space.report.ok:
        raise HypothesisFailure(f"dual of {A.name} fails the space axioms: {space.report.summary()}",
                                [c.id for c in space.report.failed_checks])
    return space


def optimal_points(space: SPriestleySpace) -> tuple[int, ...]:
    """Positions of ``ξ(x)`` among the points of the dual of ``B``."""
    family = build_representation(space.logic, space.algebra).base.family
    index = {P: i for i, P in enumerate(family)}
    return tuple(index.get(P, -1) for P in space.xi)


def check_xi(space: SPriestleySpace) -> Report:
    space.require_verified()
    rep = Report(f"{space.name or 'space'}: points as filters")
    fs = space.filters
    ops, irr = set(fs.optimal), set(fs.irreducible)
    xi = space.xi
    lab = space.algebra.names

    c = rep.check("xi-injective", "distinct points lie in different members of B")
    c.record(len(set(xi)) == space.size)
    c = rep.check("xi-filter", "ξ(x) is an S-filter of B")
    for x in range(space.size):
        c.record(fs.is_filter(xi[x]), x=space.point(x))
    c = rep.check("xi-optimal", "ξ(x) is optimal, and irreducible when x ∈ X_B")
    for x in range(space.size):
        ok = xi[x] in ops and (not space.xb >> x & 1 or xi[x] in irr)
        c.record(ok, x=space.point(x))
    c = rep.check("xi-onto", "ξ maps X onto Op_S(B) and X_B onto Irr_S(B)")
    c.record(set(xi) == ops)
    c.record({xi[x] for x in bits.iter_bits(space.xb)} == irr)
    c = rep.check("xi-order-isomorphism", "x ≤ y iff ξ(x) ⊆ ξ(y)")
    for x, y in product(range(space.size), repeat=2):
        c.record(bool(space.quasi_up[x] >> y & 1) == bits.is_subset(xi[x], xi[y]),
                 x=space.point(x), y=space.point(y))
    c = rep.check("xi-recovers-members", "ξ⁻¹[φ_B(U)] = U and ξ[U] = φ_B(U) for U ∈ B")
    for i, U in enumerate(space.sets):
        phi_U = {P for P in ops if P >> i & 1}
        c.record(bits.mask_of(x for x in range(space.size) if xi[x] in phi_U) == U and
                 {xi[x] for x in bits.iter_bits(U)} == phi_U, U=lab[i])

    c = rep.check("double-dual", "⟨Op_S(B), φ_B[B]⟩ is a space, ξ is an order isomorphism onto "
                                 "its points and φ_B has inverse ξ⁻¹[·]")
    try:
        dual = dual_space(space.logic, space.algebra)
    except (GateError, HypothesisFailure) as exc:
        c.record(False, reason=str(exc))
        return rep
    c.record(dual.report.ok)
    pos = optimal_points(space)
    c.record(sorted(pos) == list(range(dual.size)))
    for i, U in enumerate(space.sets):
        back = bits.mask_of(x for x in range(space.size) if dual.sets[i] >> pos[x] & 1)
        c.record(back == U, U=lab[i])
    return rep


@dataclass(frozen=True)
class BStructures:
    meet_closure: tuple[int, ...]
    meet_semilattice: MeetSemilattice
    lattice_closure: tuple[int, ...]
    lattice: MeetSemilattice
    report: Report


def b_structures(space: SPriestleySpace) -> BStructures:
    space.require_verified()
    full, n = space.full, len(space.sets)
    cap = bits.intersection_closure(space.sets + (full,))
    capcup = bits.union_closure(cap)
    meet = MeetSemilattice.from_sets(cap, full)
    lattice = MeetSemilattice.from_sets(capcup, full)
    rep = Report(f"{space.name or 'space'}: closures of B")
    P = space.poset

    c = rep.check("admissible-is-meet-closure", "the X_B-admissible up-sets are exactly B^∩")
    admissible = tuple(U for U in up_sets(P)
                       if bits.is_subset(max_elements(P, full & ~U), space.xb))
    c.record(set(admissible) == set(cap))

    c = rep.check("up-sets-decompose",
                  "every non-empty up-set is a finite union of non-empty members of B^∩")
    for U in up_sets(P):
        if U:
            pieces = [E for E in cap if E and bits.is_subset(E, U)]
            c.record(bool(pieces) and bits.union_all(pieces) == U, U=bits.members(U))

    c = rep.check("identity-sup-homomorphism", "the inclusion B^∩ → B^∩∪ is a sup-homomorphism")
    index = {m: i for i, m in enumerate(capcup)}
    try:
        witness = sup_homomorphism_failure(tuple(index[m] for m in cap), meet, lattice)
        c.record(witness is None, witness=witness)
    except NotAHomomorphism as exc:
        c.record(False, reason=str(exc))

    S = s_semilattice(space.logic, space.algebra)
    R = S.representation

    def h(E):
        return R.phi_hat(bits.mask_of(i for i, U in enumerate(space.sets) if bits.is_subset(E, U)))

    c = rep.check("meet-closure-iso-s-semilattice",
                  "⋂U ↦ φ̂_B(U) is a well-defined isomorphism B^∩ ≅ M(B)")
    for V in subfamilies(n):
        c.record(h(space.meet_of(V)) == R.phi_hat(V), V=bits.format_mask(V, space.algebra.labels))
    images = [h(E) for E in cap]
    c.record(sorted(images) == sorted(S.members) and len(set(images)) == len(cap))
    for E1, E2 in product(cap, repeat=2):
        c.record(h(E1 & E2) == h(E1) & h(E2), pair=[bits.members(E1), bits.members(E2)])

    c = rep.check("envelope-isomorphism", "⋃⋂U_i ↦ ⋃σ(φ̂_B(U_i)) is a lattice isomorphism "
                                          "B^∩∪ ≅ L(M(B))")
    env = distributive_envelope(S.lattice)

    def sig(E):
        return env.sigma.images[S.index[h(E)]]

    def g(W):
        return bits.union_all(sig(E) for E in cap if bits.is_subset(E, W))

    for E1, E2 in product(cap, repeat=2):
        c.record(g(E1 | E2) == sig(E1) | sig(E2), pair=[bits.members(E1), bits.members(E2)])
    gs = [g(W) for W in capcup]
    c.record(sorted(gs) == sorted(env.members) and len(set(gs)) == len(capcup))
    for W1, W2 in product(capcup, repeat=2):
        c.record(g(W1 & W2) == g(W1) & g(W2) and g(W1 | W2) == g(W1) | g(W2),
                 pair=[bits.members(W1), bits.members(W2)])

    c = rep.check("generalized-priestley-space",
                  "⟨X, ≤, X_B⟩ is a generalized Priestley space whose admissible sets are B^∩")
    X = space.gen_priestley()
    fails = X.axiom_failures()
    c.record(not fails, failures=fails[:5])
    c.record(set(X.admissibles) == set(cap))
    return BStructures(cap, meet, capcup, lattice, rep)


def check_dual_space(L: LogicPresentation, A: FiniteAlgebra) -> Report:
    """Facts about ``Dp(A)`` stated on the algebra side."""
    space = dual_space(L, A)
    fs = filter_system(L, A)
    A = fs.algebra
    rep = Report(f"{L.name}/{A.name}: dual space")
    rep.extend(space.report)
    S = s_semilattice(L, A)
    R, M = S.representation, S.lattice
    points = R.base.family
    lab = A.names

    c = rep.check("canonical-referential-order", "the order induced by φ[A] on Op_S(A) is ⊆")
    for x, y in product(range(space.size), repeat=2):
        c.record(bool(space.quasi_up[x] >> y & 1) == bits.is_subset(points[x], points[y]),
                 P=space.point(x), Q=space.point(y))

    c = rep.check("optimal-points-homeomorphism",
                  "⟦φ[·]⟧ maps Op_S(A) onto Op(M(A)) with φ⁻¹[σ(φ̂(B))] = ⋂φ[B]")
    image = [M.filter_generate(S.image(P)) for P in points]
    c.record(sorted(image) == sorted(M.optimal_filters))
    for B in range(1 << A.size):
        hat = R.phi_hat(B)
        pulled = bits.mask_of(x for x in range(space.size) if image[x] >> S.index[hat] & 1)
        c.record(pulled == hat, B=bits.format_mask(B, lab))

    irr = set(fs.irreducible)
    c = rep.check("irreducible-points",
                  "Irr_S(A) is dense, and P is irreducible iff {φ(a) : a ∉ P} is non-empty and up-directed")
    for x, P in enumerate(points):
        outside = [R.phi[a] for a in range(A.size) if not P >> a & 1]
        directed = bool(outside) and all(any(bits.is_subset(u | v, w) for w in outside)
                                         for u in outside for v in outside)
        c.record(P in irr and directed, P=space.point(x))

    c = rep.check("admissible-up-sets",
                  "an up-set U of Op_S(A) is φ̂(C) for a finite C iff max(U^c) ⊆ Irr_S(A)")
    irr_mask = bits.mask_of(x for x, P in enumerate(points) if P in irr)
    hats = {R.phi_hat(C) for C in range(1 << A.size)}
    for U in up_sets(space.poset):
        admissible = bits.is_subset(max_elements(space.poset, space.full & ~U), irr_mask)
        c.record((U in hats) == admissible, U=[space.point(x) for x in bits.iter_bits(U)])

    c = rep.check("generalized-dual",
                  "⟨Op_S(A), ⊆, Irr_S(A)⟩ is a generalized Priestley space with dual M(A)")
    X = GenPriestleySpace(space.poset, irr_mask)
    fails = X.axiom_failures()
    c.record(not fails, failures=fails[:5])
    c.record(set(X.admissibles) == set(S.members))
    return rep


# morphisms


@dataclass(frozen=True)
class SPriestleyMorphism:
    source: SPriestleySpace
    target: SPriestleySpace
    relation: Relation


def box_map(R: Relation, source: SPriestleySpace, target: SPriestleySpace) -> tuple[int | None, ...]:
    """``□_R`` on member indices: ``B_target → B_source``; None where the image leaves ``B``."""
    return tuple(source.index_of(box_of_relation(R, U)) for U in target.sets)


def _check_shape(R: Relation, source: SPriestleySpace, target: SPriestleySpace) -> None:
    if len(R) != source.size or any(r & ~target.full for r in R):
        raise ValueError("relation does not match the shapes of its spaces")


def verify_morphism(R: Relation, source: SPriestleySpace, target: SPriestleySpace) -> Report:
    _check_shape(R, source, target)
    source.require_verified()
    target.require_verified()
    rep = Report(f"{source.name or 'space'} → {target.name or 'space'}: morphism")
    lab = target.algebra.names

    c = rep.check("box-homomorphism", "□_R maps B_2 into B_1 as a homomorphism")
    mapping = box_map(R, source, target)
    for i, j in enumerate(mapping):
        c.record(j is not None, U=lab[i])
    if all(j is not None for j in mapping):
        failure = homomorphism_failure(mapping, target.algebra, source.algebra)
        c.record(failure is None, **(failure or {}))

    c = rep.check("separation", "if (x, y) ∉ R some U ∈ B_2 has y ∉ U and R(x) ⊆ U")
    for x, y in product(range(source.size), range(target.size)):
        if not R[x] >> y & 1:
            c.record(any(not U >> y & 1 and bits.is_subset(R[x], U) for U in target.sets),
                     x=source.point(x), y=target.point(y))

    c = rep.check("order-absorption", "composing with either order on either side stays inside R")
    before = compose(source.poset.up, R)
    after = compose(R, target.poset.up)
    for x in range(source.size):
        c.record(bits.is_subset(before[x], R[x]) and bits.is_subset(after[x], R[x]),
                 x=source.point(x))

    c = rep.check("generalized-morphism",
                  "R is a generalized Priestley morphism between the underlying spaces")
    if rep.get("box-homomorphism").passed:
        fails = morphism_failures(R, source.gen_priestley(), target.gen_priestley())
        c.record(not fails, failures=fails[:5])
    else:
        c.skipped = "□_R does not map B_2 into B_1"
    return rep


def make_morphism(R: Relation, source: SPriestleySpace, target: SPriestleySpace) -> SPriestleyMorphism:
    rep = verify_morphism(R, source, target)
    if not rep.ok:
        raise NotVerified(rep.summary())
    return SPriestleyMorphism(source, target, tuple(R))


def identity_morphism(space: SPriestleySpace) -> SPriestleyMorphism:
    return make_morphism(space.poset.up, space, space)


def dual_relation(h, A1: FiniteAlgebra, A2: FiniteAlgebra, L: LogicPresentation) -> Relation:
    """``R_h ⊆ Op_S(A2) × Op_S(A1)``: ``(P, Q) ∈ R_h`` iff ``h⁻¹[P] ⊆ Q``."""
    sp1, sp2 = dual_space(L, A1), dual_space(L, A2)
    ops1 = build_representation(L, sp1.algebra).base.family
    ops2 = build_representation(L, sp2.algebra).base.family
    rel = []
    for P in ops2:
        pre = bits.mask_of(a for a in range(A1.size) if P >> h[a] & 1)
        rel.append(bits.mask_of(j for j, Q in enumerate(ops1) if bits.is_subset(pre, Q)))
    return tuple(rel)


def dual_morphism(h, A1: FiniteAlgebra, A2: FiniteAlgebra, L: LogicPresentation) -> SPriestleyMorphism:
    sp1, sp2 = dual_space(L, A1), dual_space(L, A2)
    if not is_homomorphism(tuple(h), sp1.algebra, sp2.algebra):
        raise NotAHomomorphism("map is not a homomorphism", homomorphism_failure(tuple(h), sp1.algebra,
                                                                                 sp2.algebra))
    return make_morphism(dual_relation(h, A1, A2, L), sp2, sp1)


def check_dual_morphism(h, A1: FiniteAlgebra, A2: FiniteAlgebra, L: LogicPresentation,
                        name: str = "h") -> Report:
    sp1, sp2 = dual_space(L, A1), dual_space(L, A2)
    R = dual_relation(h, A1, A2, L)
    rep = Report(f"{L.name}/{name}: dual relation")
    rep.extend(verify_morphism(R, sp2, sp1))
    phi1, phi2 = sp1.sets, sp2.sets
    lab = sp1.algebra.names

    c = rep.check("preimage-of-complements", "R_h⁻¹(φ₁(a)^c) = φ₂(h(a))^c")
    for a in range(A1.size):
        outside = sp1.full & ~phi1[a]
        pre = bits.mask_of(P for P in range(sp2.size) if R[P] & outside)
        c.record(pre == sp2.full & ~phi2[h[a]], a=lab[a])
    c = rep.check("box-commutes-with-phi", "□_{R_h}(φ₁(a)) = φ₂(h(a))")
    for a in range(A1.size):
        c.record(box_of_relation(R, phi1[a]) == phi2[h[a]], a=lab[a])
    c = rep.check("box-is-homomorphism", "□_{R_h} is a homomorphism φ₁[A₁] → φ₂[A₂]")
    mapping = box_map(R, sp2, sp1)
    c.record(None not in mapping and is_homomorphism(mapping, sp1.algebra, sp2.algebra))
    # The statement prints "R_h ⊆ φ(a)"; the argument establishes R_h(P) ⊆ φ(a).
    c = rep.check("separating-element",
                  "if (P, Q) ∉ R_h some a has Q ∉ φ(a) and R_h(P) ⊆ φ(a)")
    for P, Q in product(range(sp2.size), range(sp1.size)):
        if not R[P] >> Q & 1:
            c.record(any(not phi1[a] >> Q & 1 and bits.is_subset(R[P], phi1[a])
                         for a in range(A1.size)), P=sp2.point(P), Q=sp1.point(Q))
    return rep


def star(S: SPriestleyMorphism, R: SPriestleyMorphism) -> SPriestleyMorphism:
    """``S ⋆ R`` for ``R: X1 → X2`` and ``S: X2 → X3``."""
    if R.target != S.source:
        raise ValueError("morphisms are not composable")
    X3 = S.target
    return make_morphism(star_over(S.relation, R.relation, X3.sets, X3.size), R.source, X3)


def t_morphism(space: SPriestleySpace) -> SPriestleyMorphism:
    """``T_X ⊆ X × Op_S(B)``: ``(x, P)`` iff ``ξ(x) ⊆ P``."""
    dual = dual_space(space.logic, space.algebra)
    ops = build_representation(space.logic, space.algebra).base.family
    rel = tuple(bits.mask_of(j for j, P in enumerate(ops) if bits.is_subset(space.xi[x], P))
                for x in range(space.size))
    return make_morphism(rel, space, dual)


def t_inverse(space: SPriestleySpace) -> SPriestleyMorphism:
    dual = dual_space(space.logic, space.algebra)
    ops = build_representation(space.logic, space.algebra).base.family
    rel = tuple(bits.mask_of(x for x in range(space.size) if bits.is_subset(P, space.xi[x]))
                for P in ops)
    return make_morphism(rel, dual, space)


def _star_rel(S: Relation, R: Relation, X3: SPriestleySpace) -> Relation:
    return star_over(S, R, X3.sets, X3.size)


def check_natural_isos(L: LogicPresentation, algebras, homs=(), spaces=()) -> Report:
    """Functor laws and both natural isomorphisms over a corpus.

    ``homs`` holds ``(name, mapping, source, target)`` tuples between the given algebras.
    """
    rep = Report(f"{L.name}: duality")
    duals = {A: dual_space(L, A) for A in algebras}
    rels = {}
    for name, h, A1, A2 in homs:
        rels[name] = dual_relation(h, A1, A2, L)

    c = rep.check("identity-dualizes-to-order", "R_id is the order ⊆ of the dual space")
    for A, sp in duals.items():
        ident = tuple(range(A.size))
        c.record(dual_relation(ident, A, A, L) == sp.poset.up, algebra=A.name)

    c = rep.check("composition-dualizes-to-star", "R_{g∘f} = R_f ⋆ R_g")
    for (nf, f, A1, A2), (ng, g, B1, B3) in product(homs, repeat=2):
        if A2 != B1:
            continue
        gf = tuple(g[f[a]] for a in range(A1.size))
        lhs = dual_relation(gf, A1, B3, L)
        c.record(lhs == _star_rel(rels[nf], rels[ng], duals[A1]), f=nf, g=ng)

    c = rep.check("phi-naturality", "□_{R_h} ∘ φ₁ = φ₂ ∘ h")
    for name, h, A1, A2 in homs:
        for a in range(A1.size):
            c.record(box_of_relation(rels[name], duals[A1].sets[a]) == duals[A2].sets[h[a]],
                     hom=name, a=A1.label(a))

    c = rep.check("phi-isomorphism", "φ is an isomorphism from A onto the algebra of its dual")
    for A in algebras:
        R = build_representation(L, A)
        c.record(is_homomorphism(R.embedding, R.algebra, R.image) and
                 len(set(R.embedding)) == A.size, algebra=A.name)

    # every morphism in the corpus: duals of homs plus orders
    morphisms = [(f"R_{name}", make_morphism(rels[name], duals[A2], duals[A1]))
                 for name, h, A1, A2 in homs]
    all_spaces = list(duals.values()) + [sp for sp in spaces if sp not in duals.values()]
    morphisms += [(f"≤ of {sp.name}", identity_morphism(sp)) for sp in all_spaces]

    c = rep.check("star-identity-laws",
                  "≤₂∘R = R = ≤₂⋆R read on either side, and S ⋆ R is again a morphism")
    for name, m in morphisms:
        up1, up2 = m.source.poset.up, m.target.poset.up
        R = m.relation
        c.record(compose(R, up2) == R and compose(up1, R) == R, morphism=name)
        c.record(_star_rel(up2, R, m.target) == compose(R, up2), morphism=name)
        c.record(_star_rel(R, up1, m.target) == compose(up1, R), morphism=name)
    for (n1, m1), (n2, m2) in product(morphisms, repeat=2):
        if m1.target == m2.source:
            c.record(verify_morphism(_star_rel(m2.relation, m1.relation, m2.target),
                                     m1.source, m2.target).ok, first=n1, then=n2)

    c = rep.check("star-associative", "T ⋆ (S ⋆ R) = (T ⋆ S) ⋆ R")
    for (n1, m1), (n2, m2), (n3, m3) in product(morphisms, repeat=3):
        if m1.target == m2.source and m2.target == m3.source:
            left = _star_rel(m3.relation, _star_rel(m2.relation, m1.relation, m2.target), m3.target)
            right = _star_rel(_star_rel(m3.relation, m2.relation, m3.target), m1.relation, m3.target)
            c.record(left == right, chain=[n1, n2, n3])

    t_check = rep.check("t-morphism", "T_X is a morphism with □_{T_X} = φ_B⁻¹")
    iso = rep.check("t-isomorphism", "T_X has an inverse morphism under ⋆")
    nat = rep.check("xi-naturality",
                    "(x, y) ∈ R iff (ξ₁(x), ξ₂(y)) ∈ R_{□_R}, and R_{□_R} ⋆ T_{X₁} = T_{X₂} ⋆ R")
    trip = rep.check("round-trip", "X ≅ Dp(X•) through ξ, matching B with φ_B[B]")
    ts = {}
    for sp in all_spaces:
        try:
            T, Tinv = t_morphism(sp), t_inverse(sp)
        except (NotVerified, GateError, HypothesisFailure) as exc:
            t_check.record(False, space=sp.name, reason=str(exc))
            continue
        ts[sp] = T
        dual = T.target
        t_check.record(all(box_of_relation(T.relation, dual.sets[i]) == U
                           for i, U in enumerate(sp.sets)), space=sp.name)
        iso.record(_star_rel(Tinv.relation, T.relation, sp) == sp.poset.up and
                   _star_rel(T.relation, Tinv.relation, dual) == dual.poset.up, space=sp.name)
        pos = optimal_points(sp)
        ok = sorted(pos) == list(range(dual.size))
        ok = ok and all(bits.mask_of(pos[x] for x in bits.iter_bits(U)) == dual.sets[i]
                        for i, U in enumerate(sp.sets))
        ok = ok and all(sp.poset.leq(x, y) == dual.poset.leq(pos[x], pos[y])
                        for x, y in product(range(sp.size), repeat=2))
        trip.record(ok, space=sp.name)
    for name, m in morphisms:
        sp1, sp2 = m.source, m.target
        if sp1 not in ts or sp2 not in ts:
            continue
        box = box_map(m.relation, sp1, sp2)
        Rb = dual_relation(box, sp2.algebra, sp1.algebra, L)
        p1, p2 = optimal_points(sp1), optimal_points(sp2)
        for x, y in product(range(sp1.size), range(sp2.size)):
            nat.record(bool(m.relation[x] >> y & 1) == bool(Rb[p1[x]] >> p2[y] & 1),
                       morphism=name, x=sp1.point(x), y=sp2.point(y))
        target = ts[sp2].target
        lhs = _star_rel(Rb, ts[sp1].relation, target)
        rhs = _star_rel(ts[sp2].relation, m.relation, target)
        nat.record(lhs == rhs, morphism=name)
    return rep
