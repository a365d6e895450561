"""The representation map over a closure base, the image algebra and the S-semilattice.

Given a closure base ``F`` for the S-filters of ``A``, ``φ(a)`` is the set of
base members containing ``a`` and ``φ̂(B)`` the set of members containing all
of ``B``. Sets of base members are masks over base indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from . import bits
from .algebra import FiniteAlgebra
from .errors import HypothesisFailure, RepresentationError
from .logic import FilterSystem, LogicPresentation, filter_system
from .order import down_closure, frink_closure, is_up_directed
from .report import Report
from .semilattice import MeetSemilattice

FAMILY_CAP = 10
FAMILY_LEN = 3


@dataclass(frozen=True)
class ClosureBase:
    family: tuple[int, ...]
    kind: str


def closure_base_failures(fs: FilterSystem, family) -> list[int]:
    """S-filters that are not the intersection of the base members above them."""
    return [F for F in fs.filters
            if bits.intersect_all((P for P in family if bits.is_subset(F, P)), fs.full) != F]


def closure_base(L: LogicPresentation, A: FiniteAlgebra, kind: str = "all_optimal",
                 family=None) -> ClosureBase:
    fs = filter_system(L, A)
    if kind == "all_optimal":
        family = fs.optimal
    elif kind == "all_irreducible":
        family = fs.irreducible
    elif family is None:
        raise ValueError("a custom base needs its family")
    family = bits.family(family)
    if any(not fs.is_filter(P) for P in family):
        raise RepresentationError("base members must be S-filters")
    bad = closure_base_failures(fs, family)
    if bad:
        raise RepresentationError("family is not a closure base", {"filter": bad[0]})
    return ClosureBase(family, kind)


@dataclass(frozen=True)
class RepresentedAlgebra:
    logic: LogicPresentation
    algebra: FiniteAlgebra
    base: ClosureBase
    phi: tuple[int, ...]
    members: tuple[int, ...]
    embedding: tuple[int, ...]
    image: FiniteAlgebra

    @property
    def full(self) -> int:
        return bits.full(len(self.base.family))

    def phi_hat(self, B: int) -> int:
        return bits.intersect_all((self.phi[b] for b in bits.iter_bits(B)), self.full)

    def image_of(self, B: int) -> int:
        """``φ[B]`` as a mask over the elements of the image algebra."""
        return bits.mask_of(self.embedding[b] for b in bits.iter_bits(B))


def build_representation(L: LogicPresentation, A: FiniteAlgebra,
                         base: ClosureBase | None = None) -> RepresentedAlgebra:
    fs = filter_system(L, A)
    A = fs.algebra
    if base is None:
        base = closure_base(L, A)
    phi = tuple(bits.mask_of(i for i, P in enumerate(base.family) if P >> a & 1)
                for a in range(A.size))
    seen: dict[int, int] = {}
    for a, m in enumerate(phi):
        if m in seen:
            raise RepresentationError("φ is not injective", {"pair": [seen[m], a]})
        seen[m] = a
    members = tuple(sorted(phi))
    index = {m: i for i, m in enumerate(members)}
    embedding = tuple(index[m] for m in phi)
    source = {embedding[a]: a for a in range(A.size)}
    tables = []
    for op, arity in A.signature.connectives:
        tables.append((op, tuple(embedding[A.apply(op, *(source[i] for i in args))]
                                 for args in product(range(A.size), repeat=arity))))
    labels = tuple(A.label(source[i]) for i in range(A.size))
    image = FiniteAlgebra(A.signature, A.size, tuple(tables), labels, f"phi[{A.name}]")
    return RepresentedAlgebra(L, A, base, phi, members, embedding, image)


def check_representation(L: LogicPresentation, A: FiniteAlgebra,
                      base: ClosureBase | None = None) -> Report:
    """Representation theorem checks over a closure base (optimal base by default)."""
    R = build_representation(L, A, base)
    fs = filter_system(L, R.algebra)
    A = R.algebra
    img = filter_system(L, R.image)
    rep = Report(f"{L.name}/{A.name}: representation")
    subsets = range(1 << A.size)

    c = rep.check("phi-order-isomorphism", "a ≤ b in the specialization order iff φ(a) ⊆ φ(b)")
    for a, b in product(range(A.size), repeat=2):
        c.record(fs.leq(a, b) == bits.is_subset(R.phi[a], R.phi[b]), a=A.label(a), b=A.label(b))

    c = rep.check("phi-homomorphism", "operations on φ[A] are well defined by f(φ(a⃗)) = φ(f(a⃗))")
    for op, arity in A.signature.connectives:
        for args in product(range(A.size), repeat=arity):
            lhs = R.image.apply(op, *(R.embedding[x] for x in args))
            c.record(lhs == R.embedding[A.apply(op, *args)], op=op, args=[A.label(x) for x in args])

    c = rep.check("phi-hat-empty", "φ̂(∅) is the whole base")
    c.record(R.phi_hat(0) == R.full)

    c = rep.check("no-set-represents-only-carrier",
                  "φ̂(B) differs from {A} for every non-empty finite B")
    if fs.full in R.base.family:
        only_A = 1 << R.base.family.index(fs.full)
        for B in range(1, 1 << A.size):
            c.record(R.phi_hat(B) != only_A, B=bits.format_mask(B, A.labels))
    else:
        c.record(True)

    c = rep.check("base-images-closure-base",
                  "the images φ[P] of base members form a closure base for the filters of φ[A]")
    images = [R.image_of(P) for P in R.base.family]
    for P in images:
        c.record(img.is_filter(P), member=bits.format_mask(P, R.image.labels))
    for G in img.filters:
        got = bits.intersect_all((P for P in images if bits.is_subset(G, P)), img.full)
        c.record(got == G, filter=bits.format_mask(G, R.image.labels))

    c = rep.check("membership-three-ways",
                  "a ∈ Fg(B) iff φ̂(B) ⊆ φ(a) iff φ(a) ∈ Fg(φ[B])")
    for B in subsets:
        F, hat, FB = fs.fg(B), R.phi_hat(B), img.fg(R.image_of(B))
        for a in range(A.size):
            x = bool(F >> a & 1)
            y = bits.is_subset(hat, R.phi[a])
            z = bool(FB >> R.embedding[a] & 1)
            c.record(x == y == z, a=A.label(a), B=bits.format_mask(B, A.labels))

    c = rep.check("generation-commutes", "Fg(φ[B]) = φ[Fg(B)]")
    for B in subsets:
        c.record(img.fg(R.image_of(B)) == R.image_of(fs.fg(B)), B=bits.format_mask(B, A.labels))

    c = rep.check("same-filter-same-phi-hat", "Fg(B) = Fg(B') iff φ̂(B) = φ̂(B')")
    hat_of_filter: dict[int, int] = {}
    filter_of_hat: dict[int, int] = {}
    for B in subsets:
        F, hat = fs.fg(B), R.phi_hat(B)
        ok = hat_of_filter.setdefault(F, hat) == hat and filter_of_hat.setdefault(hat, F) == F
        c.record(ok, B=bits.format_mask(B, A.labels))
    return rep


@dataclass(frozen=True)
class SSemilattice:
    representation: RepresentedAlgebra
    members: tuple[int, ...]
    lattice: MeetSemilattice

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.members)}

    @cached_property
    def element(self) -> tuple[int, ...]:
        """Index in ``M(A)`` of ``φ(a)``."""
        return tuple(self.index[m] for m in self.representation.phi)

    def hat(self, B: int) -> int:
        return self.index[self.representation.phi_hat(B)]

    def image(self, X: int) -> int:
        """``φ[X]`` as a mask over ``M(A)``."""
        return bits.mask_of(self.element[a] for a in bits.iter_bits(X))

    def preimage(self, G: int) -> int:
        """``φ⁻¹[G]`` for ``G`` a mask over ``M(A)``."""
        return bits.mask_of(a for a, i in enumerate(self.element) if G >> i & 1)


def s_semilattice(L: LogicPresentation, A: FiniteAlgebra,
                  base: ClosureBase | None = None) -> SSemilattice:
    R = build_representation(L, A, base)
    members = bits.intersection_closure(R.phi + (R.full,))
    return SSemilattice(R, members, MeetSemilattice.from_sets(members, R.full))


def filter_families(fs: FilterSystem, nonempty: bool):
    Fs = fs.filters
    if len(Fs) <= FAMILY_CAP:
        sizes = range(1 if nonempty else 0, len(Fs) + 1)
    else:
        sizes = range(1 if nonempty else 0, FAMILY_LEN + 1)
    for k in sizes:
        yield from combinations(Fs, k)


def check_semilattice_isos(L: LogicPresentation, A: FiniteAlgebra) -> Report:
    """Correspondences between S-filters/ideals of ``A`` and filters/ideals of ``M(A)``."""
    fs = filter_system(L, A)
    A = fs.algebra
    S = s_semilattice(L, A)
    M = S.lattice
    rep = Report(f"{L.name}/{A.name}: S-semilattice")
    lab = A.names

    def gen(X):
        return M.filter_generate(S.image(X))

    c = rep.check("bottom-family-iff-empty-member",
                  "A has a bottom-family iff the empty set belongs to M(A)")
    c.record((fs.bottom_family is not None) == (0 in S.index))

    if not fs.has_theorems:
        rep.skip("nonempty-description", "M(A) is the set of φ̂(B) for non-empty B", "no theorems")
    else:
        c = rep.check("nonempty-description", "M(A) is the set of φ̂(B) for non-empty B")
        got = bits.family(S.representation.phi_hat(B) for B in range(1, 1 << A.size))
        c.record(got == S.members)

    c = rep.check("filter-generation-transfer",
                  "⋂ Fg(B_i) ⊆ Fg(B) iff ⋂ ⟦φ̂(B_i)⟧ ⊆ ⟦φ̂(B)⟧, empty family included")
    for fam in filter_families(fs, nonempty=False):
        left = bits.intersect_all(fam, fs.full)
        right = bits.intersect_all((M.poset.up[S.hat(G)] for G in fam), M.full)
        for B in range(1 << A.size):
            ok = bits.is_subset(left, fs.fg(B)) == bits.is_subset(right, M.poset.up[S.hat(B)])
            c.record(ok, family=[bits.format_mask(G, lab) for G in fam], B=bits.format_mask(B, lab))

    c = rep.check("filters-to-semilattice-filters",
                  "⟦φ[F]⟧ is a filter of M(A) with φ⁻¹⟦φ[F]⟧ = F")
    for F in fs.filters:
        G = gen(F)
        c.record(M.is_filter(G) and S.preimage(G) == F, F=bits.format_mask(F, lab))
    c = rep.check("semilattice-filters-to-filters",
                  "φ⁻¹[G] is an S-filter with ⟦φ[φ⁻¹[G]]⟧ = G")
    for G in M.filters:
        F = S.preimage(G)
        c.record(fs.is_filter(F) and gen(F) == G, G=G)
    c = rep.check("filter-lattice-isomorphism",
                  "⟦φ[·]⟧ is a bijection Fi_S(A) → Fi(M(A)) preserving and reflecting ⊆")
    forward = {F: gen(F) for F in fs.filters}
    c.record(sorted(forward.values()) == sorted(M.filters))
    for F1, F2 in product(fs.filters, repeat=2):
        c.record(bits.is_subset(F1, F2) == bits.is_subset(forward[F1], forward[F2]),
                 F1=bits.format_mask(F1, lab), F2=bits.format_mask(F2, lab))

    frink = [I for I in range(1 << M.size) if frink_closure(M.poset, I) == I]
    c = rep.check("strong-ideal-generates-down-set", "⟦φ[I]⟧ = ↓φ[I] for strong S-ideals I")
    for I in fs.strong_ideals:
        c.record(frink_closure(M.poset, S.image(I)) == down_closure(M.poset, S.image(I)),
                 I=bits.format_mask(I, lab))
    c = rep.check("strong-ideals-to-frink-ideals",
                  "⟦φ[I]⟧ is a Frink ideal with φ⁻¹⟦φ[I]⟧ = I, ∧-prime when I is S-prime")
    for I in fs.strong_ideals:
        J = frink_closure(M.poset, S.image(I))
        ok = J in frink and S.preimage(J) == I
        if fs.is_s_prime(I):
            ok = ok and M.is_wedge_prime(J)
        c.record(ok, I=bits.format_mask(I, lab))
    # Without theorems M(A) \ {⊤} can be a ∧-prime Frink ideal that swallows all of φ[A];
    # only ideals with a proper preimage take part in the correspondence.
    prime_frink = [J for J in frink if M.is_wedge_prime(J)]
    c = rep.check("prime-frink-ideal-proper-preimage",
                  "with theorems, every ∧-prime Frink ideal J has φ⁻¹[J] ≠ A")
    if fs.has_theorems:
        for J in prime_frink:
            c.record(S.preimage(J) != fs.full, J=J)
    else:
        c.skipped = "no theorems"
    prime_frink = [J for J in prime_frink if S.preimage(J) != fs.full]
    c = rep.check("prime-frink-ideals-to-strong-ideals",
                  "for ∧-prime Frink ideals J with φ⁻¹[J] ≠ A, φ⁻¹[J] is a strong S-prime S-ideal "
                  "with ⟦φ[φ⁻¹[J]]⟧ = J")
    strong = set(fs.strong_ideals)
    for J in prime_frink:
        I = S.preimage(J)
        c.record(I in strong and fs.is_s_prime(I) and frink_closure(M.poset, S.image(I)) == J, J=J)
    c = rep.check("prime-ideal-bijection",
                  "S-prime strong S-ideals correspond to ∧-prime Frink ideals, preserving ⊆")
    prime_strong = [I for I in fs.strong_ideals if fs.is_s_prime(I)]
    fwd = {I: frink_closure(M.poset, S.image(I)) for I in prime_strong}
    c.record(sorted(fwd.values()) == sorted(prime_frink))
    for I1, I2 in product(prime_strong, repeat=2):
        c.record(bits.is_subset(I1, I2) == bits.is_subset(fwd[I1], fwd[I2]),
                 I1=bits.format_mask(I1, lab), I2=bits.format_mask(I2, lab))

    if not fs.is_filter_distributive:
        reason = "not filter-distributive on this algebra"
        for cid in ("finite-join-transfer", "optimal-filter-transfer", "optimal-filter-isomorphism",
                    "irreducible-via-images"):
            rep.skip(cid, "requires filter-distributivity", reason)
        return rep

    c = rep.check("finite-join-transfer",
                  "⋂ Fg(B_i) ⊆ Fg(B) iff φ̂(B) ⊆ ⋃ φ̂(B_i) for non-empty families")
    R = S.representation
    for fam in filter_families(fs, nonempty=True):
        left = bits.intersect_all(fam, fs.full)
        cover = bits.union_all(R.phi_hat(G) for G in fam)
        for B in range(1 << A.size):
            ok = bits.is_subset(left, fs.fg(B)) == bits.is_subset(R.phi_hat(B), cover)
            c.record(ok, family=[bits.format_mask(G, lab) for G in fam], B=bits.format_mask(B, lab))

    ops = fs.optimal
    c = rep.check("optimal-filter-transfer",
                  "⟦φ[F]⟧ is optimal in M(A) for optimal F, and φ⁻¹ maps optimal to optimal")
    m_ops = set(M.optimal_filters)
    for F in ops:
        c.record(gen(F) in m_ops, F=bits.format_mask(F, lab))
    for G in M.optimal_filters:
        c.record(S.preimage(G) in ops, G=G)
    c = rep.check("optimal-filter-isomorphism",
                  "optimal S-filters ↔ optimal filters of M(A), mutually inverse, ⊆ both ways")
    # The empty filter, optimal when there are no theorems, pairs with {⊤}.
    fwd = {F: gen(F) for F in ops}
    c.record(sorted(fwd.values()) == sorted(M.optimal_filters))
    for F in ops:
        c.record(S.preimage(fwd[F]) == F, F=bits.format_mask(F, lab))
    for F1, F2 in product(ops, repeat=2):
        c.record(bits.is_subset(F1, F2) == bits.is_subset(fwd[F1], fwd[F2]),
                 F1=bits.format_mask(F1, lab), F2=bits.format_mask(F2, lab))

    c = rep.check("irreducible-via-images",
                  "an optimal F is irreducible iff {φ(a) : a ∉ F} is non-empty and up-directed, "
                  "iff {φ̂(B) : F ⊄ φ̂(B)} is")
    irr = set(fs.irreducible)
    for F in ops:
        outside = [R.phi[a] for a in range(A.size) if not F >> a & 1]
        directed = bool(outside) and all(
            any(bits.is_subset(x | y, z) for z in outside) for x in outside for y in outside)
        fi = R.base.family.index(F) if F in R.base.family else None
        if fi is None:
            raise HypothesisFailure("optimal filter missing from the optimal base")
        not_above = bits.mask_of(i for i, m in enumerate(S.members) if not m >> fi & 1)
        via_m = bool(not_above) and is_up_directed(M.poset, not_above)
        c.record((F in irr) == directed == via_m, F=bits.format_mask(F, lab))
    return rep


def check_base_independence(L: LogicPresentation, A: FiniteAlgebra) -> Report:
    """The S-semilattices over the optimal and the irreducible base are isomorphic via φ̂(B) ↦ φ̂(B)."""
    rep = Report(f"{L.name}/{A.name}: base independence")
    fs = filter_system(L, A)
    c = rep.check("optimal-vs-irreducible-base",
                  "φ̂_Op(B) ↦ φ̂_Irr(B) is a well-defined ∩-preserving bijection")
    try:
        R1 = build_representation(L, fs.algebra, closure_base(L, fs.algebra, "all_optimal"))
        R2 = build_representation(L, fs.algebra, closure_base(L, fs.algebra, "all_irreducible"))
    except RepresentationError as exc:
        c.record(False, reason=str(exc))
        return rep
    forth: dict[int, int] = {}
    back: dict[int, int] = {}
    for B in range(1 << fs.size):
        x, y = R1.phi_hat(B), R2.phi_hat(B)
        c.record(forth.setdefault(x, y) == y and back.setdefault(y, x) == x,
                 B=bits.format_mask(B, fs.algebra.labels))
    for x1, x2 in product(forth, repeat=2):
        if x1 & x2 in forth:
            c.record(forth[x1 & x2] == forth[x1] & forth[x2], pair=[x1, x2])
    return rep
