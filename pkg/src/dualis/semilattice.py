"""Meet-semilattices with top: filters, distributivity, optimal filters and the envelope."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from . import bits
from .config import SEMILATTICE_CAP, carrier_cap
from .errors import (
    CarrierTooLarge,
    CharacterizationMismatch,
    HypothesisFailure,
    NotAHomomorphism,
    NotASemilattice,
)
from .order import FinitePoset, frink_closure, is_order_ideal


@dataclass(frozen=True)
class MeetSemilattice:
    poset: FinitePoset
    meet: tuple[tuple[int, ...], ...]
    top: int
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.poset.size
        cap = carrier_cap(SEMILATTICE_CAP)
        if n > cap:
            raise CarrierTooLarge(n, cap, "semilattice")
        if n == 0:
            raise NotASemilattice("a meet-semilattice with top has at least one element")
        if not 0 <= self.top < n:
            raise NotASemilattice("top out of range")
        for a in range(n):
            if self.meet[a][self.top] != a:
                raise NotASemilattice(f"{a} ∧ top != {a}")
            for b in range(n):
                m = self.meet[a][b]
                if m != self.meet[b][a]:
                    raise NotASemilattice(f"meet not commutative at {a}, {b}")
                if (m == a) != self.poset.leq(a, b):
                    raise NotASemilattice(f"meet disagrees with the order at {a}, {b}")
                if self.poset.down[a] & self.poset.down[b] != self.poset.down[m]:
                    raise NotASemilattice(f"{m} is not the greatest lower bound of {a}, {b}")

    @classmethod
    def from_meet_table(cls, table: Sequence[Sequence[int]], labels=None) -> "MeetSemilattice":
        n = len(table)
        poset = FinitePoset.from_matrix([[table[a][b] == a for b in range(n)] for a in range(n)])
        tops = [t for t in range(n) if all(table[a][t] == a for a in range(n))]
        if not tops:
            raise NotASemilattice("no top element")
        meet = tuple(tuple(int(x) for x in row) for row in table)
        return cls(poset, meet, tops[0], labels)

    @classmethod
    def from_poset(cls, poset: FinitePoset, labels=None) -> "MeetSemilattice":
        """Read meets off the order; fails unless every pair has a greatest lower bound."""
        n = poset.size
        top = poset.top()
        if top is None:
            raise NotASemilattice("no top element")
        meet = []
        for a in range(n):
            row = []
            for b in range(n):
                common = poset.down[a] & poset.down[b]
                greatest = [c for c in bits.iter_bits(common) if poset.down[c] == common]
                if not greatest:
                    raise NotASemilattice(f"{a} and {b} have no meet")
                row.append(greatest[0])
            meet.append(tuple(row))
        return cls(poset, tuple(meet), top, labels)

    @classmethod
    def from_sets(cls, masks, universe: int) -> "MeetSemilattice":
        """The family ``masks`` under intersection; it must contain ``universe`` and be ∩-closed."""
        members = bits.family(masks)
        index = {m: i for i, m in enumerate(members)}
        if universe not in index:
            raise NotASemilattice("family lacks the top set")
        meet = []
        for a in members:
            row = []
            for b in members:
                if a & b not in index:
                    raise NotASemilattice("family is not closed under intersection")
                row.append(index[a & b])
            meet.append(tuple(row))
        n = len(members)
        poset = FinitePoset(n, tuple(
            bits.mask_of(j for j in range(n) if bits.is_subset(members[i], members[j]))
            for i in range(n)))
        return cls(poset, tuple(meet), index[universe])

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def full(self) -> int:
        return self.poset.full

    @cached_property
    def bottom(self) -> int:
        return self.meet_all(self.full)

    def meet_all(self, U: int) -> int:
        out = self.top
        for a in bits.iter_bits(U):
            out = self.meet[out][a]
        return out

    def name(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    # filters

    def filter_generate(self, B: int) -> int:
        if not B:
            return 1 << self.top
        return self.poset.up[self.meet_all(B)]

    def is_filter(self, F: int) -> bool:
        # a finite filter is the up-set of the meet of its members
        return bool(F) and self.poset.up[self.meet_all(F)] == F

    @cached_property
    def filters(self) -> tuple[int, ...]:
        return bits.family(self.poset.up[a] for a in range(self.size))

    @cached_property
    def frink_ideals(self) -> tuple[int, ...]:
        return tuple(I for I in range(1 << self.size) if frink_closure(self.poset, I) == I)

    @cached_property
    def irreducible_filters(self) -> tuple[int, ...]:
        out = []
        for F in self.filters:
            if F == self.full:
                continue
            above = [G for G in self.filters if G != F and bits.is_subset(F, G)]
            if not any(G & H == F for i, G in enumerate(above) for H in above[i:]):
                out.append(F)
        return tuple(out)

    @cached_property
    def optimal_filters(self) -> tuple[int, ...]:
        """Filters ``F`` paired with a Frink ideal ``I``, each maximal disjoint from the other."""
        Fs, Is = self.filters, self.frink_ideals
        out = []
        for F in Fs:
            for I in Is:
                if F & I:
                    continue
                if any(G & ~F and bits.is_subset(F, G) and not G & I for G in Fs):
                    continue
                if any(J & ~I and bits.is_subset(I, J) and not J & F for J in Is):
                    continue
                out.append(F)
                break
        return tuple(out)

    # distributivity

    def celani_distributive(self) -> bool:
        """``b1 ∧ b2 ≤ a`` always splits as ``a = c1 ∧ c2`` with ``c1 ≥ b1``, ``c2 ≥ b2``."""
        n, up = self.size, self.poset.up
        for b1, b2 in product(range(n), repeat=2):
            for a in bits.iter_bits(up[self.meet[b1][b2]]):
                if not any(self.meet[c1][c2] == a
                           for c1 in bits.iter_bits(up[b1]) for c2 in bits.iter_bits(up[b2])):
                    return False
        return True

    def filter_lattice_distributive(self) -> bool:
        Fs = self.filters

        def join(G, H):
            return self.filter_generate(G | H)

        return all(F & join(G, H) == join(F & G, F & H) for F, G, H in product(Fs, repeat=3))

    def irreducible_complement_distributive(self) -> bool:
        irr = set(self.irreducible_filters)
        return all((F in irr) == is_order_ideal(self.poset, self.full & ~F) for F in self.filters)

    def distributivity_report(self) -> dict[str, bool]:
        return {
            "element-splitting": self.celani_distributive(),
            "filter-lattice": self.filter_lattice_distributive(),
            "irreducible-complements": self.irreducible_complement_distributive(),
        }

    @cached_property
    def is_distributive(self) -> bool:
        report = self.distributivity_report()
        values = set(report.values())
        if len(values) > 1:
            raise CharacterizationMismatch("distributivity characterizations disagree", report)
        return values.pop()

    def is_wedge_prime(self, I: int) -> bool:
        """Proper, and whenever a non-empty meet lands in ``I`` one of its factors does."""
        if I == self.full:
            return False
        for U in range(1, 1 << self.size):
            if I >> self.meet_all(U) & 1 and not U & I:
                return False
        return True

    def require_distributive(self) -> None:
        if not self.is_distributive:
            raise HypothesisFailure("the semilattice is not distributive", ["distributive"])


def filter_generate(M: MeetSemilattice, B: int) -> int:
    return M.filter_generate(B)


def filters_all(M: MeetSemilattice) -> tuple[int, ...]:
    return M.filters


def irreducible_filters(M: MeetSemilattice) -> tuple[int, ...]:
    return M.irreducible_filters


def optimal_filters(M: MeetSemilattice) -> tuple[int, ...]:
    return M.optimal_filters


def is_distributive(M: MeetSemilattice) -> bool:
    return M.is_distributive


def is_wedge_prime(M: MeetSemilattice, I: int) -> bool:
    return M.is_wedge_prime(I)


def is_meet_homomorphism(h: Sequence[int], M1: MeetSemilattice, M2: MeetSemilattice) -> bool:
    if h[M1.top] != M2.top:
        return False
    return all(h[M1.meet[a][b]] == M2.meet[h[a]][h[b]]
               for a in range(M1.size) for b in range(M1.size))


def sup_homomorphism_failure(h: Sequence[int], M1: MeetSemilattice, M2: MeetSemilattice):
    """First ``(A, b)`` where ``⋂↑A ⊆ ↑b`` holds in ``M1`` but fails after applying ``h``."""
    if len(h) != M1.size or not is_meet_homomorphism(h, M1, M2):
        raise NotAHomomorphism("map does not preserve meets and top")
    P1, P2 = M1.poset, M2.poset
    for A in range(1 << M1.size):
        ub1 = P1.upper_bounds(A)
        ub2 = P2.upper_bounds(bits.mask_of(h[a] for a in bits.iter_bits(A)))
        for b in range(M1.size):
            if bits.is_subset(ub1, P1.up[b]) and not bits.is_subset(ub2, P2.up[h[b]]):
                return A, b
    return None


def is_sup_homomorphism(h: Sequence[int], M1: MeetSemilattice, M2: MeetSemilattice) -> bool:
    return sup_homomorphism_failure(h, M1, M2) is None


@dataclass(frozen=True)
class Sigma:
    """``σ(a)`` as a mask over the indices of ``points`` (the optimal filters)."""

    points: tuple[int, ...]
    images: tuple[int, ...]


def sigma(M: MeetSemilattice) -> Sigma:
    M.require_distributive()
    points = M.optimal_filters
    images = tuple(bits.mask_of(i for i, P in enumerate(points) if P >> a & 1)
                   for a in range(M.size))
    return Sigma(points, images)


@dataclass(frozen=True)
class Envelope:
    """The union-closure of ``σ[M]`` together with the embedding of ``M``."""

    sigma: Sigma
    members: tuple[int, ...]
    lattice: MeetSemilattice
    embedding: tuple[int, ...]


def distributive_envelope(M: MeetSemilattice) -> Envelope:
    s = sigma(M)
    members = bits.union_closure(s.images)
    lattice = MeetSemilattice.from_sets(members, bits.full(len(s.points)))
    index = {m: i for i, m in enumerate(members)}
    return Envelope(s, members, lattice, tuple(index[x] for x in s.images))


def sigma_condition_failures(M: MeetSemilattice, max_len: int = 3) -> list[tuple]:
    """Failures of: ``⋂↑b_i ⊆ ↑a`` iff ``σ(a) ⊆ ⋃σ(b_i)``, over tuples of length 1..max_len."""
    s = sigma(M)
    P = M.poset
    out = []
    for k in range(1, max_len + 1):
        for bs in product(range(M.size), repeat=k):
            ub = P.upper_bounds(bits.mask_of(bs))
            cover = bits.union_all(s.images[b] for b in bs)
            for a in range(M.size):
                if bits.is_subset(ub, P.up[a]) != bits.is_subset(s.images[a], cover):
                    out.append((a, bs))
    return out


def filter_envelope_failures(M: MeetSemilattice) -> list[tuple]:
    """Failures of the correspondence ``Fi(M) ≅ Fi(L(M))`` through ``⟦σ[·]⟧`` and ``σ⁻¹[·]``."""
    env = distributive_envelope(M)
    L, e = env.lattice, env.embedding
    out = []

    def forward(F):
        return L.filter_generate(bits.mask_of(e[a] for a in bits.iter_bits(F)))

    def backward(G):
        return bits.mask_of(a for a in range(M.size) if G >> e[a] & 1)

    images = {}
    for F in M.filters:
        G = forward(F)
        images[F] = G
        if not L.is_filter(G) or backward(G) != F:
            out.append(("round-trip", F))
    if set(images.values()) != set(L.filters):
        out.append(("onto", tuple(sorted(set(L.filters) - set(images.values())))))
    for G in L.filters:
        F = backward(G)
        if not M.is_filter(F) or forward(F) != G:
            out.append(("inverse-round-trip", G))
    for F1, F2 in product(M.filters, repeat=2):
        if bits.is_subset(F1, F2) != bits.is_subset(images[F1], images[F2]):
            out.append(("order", F1, F2))
    return out
